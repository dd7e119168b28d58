// Copyright 2026 The blockgof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKGOF_GOF_HPP_
#define BLOCKGOF_GOF_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "blockgof/cycles.hpp"
#include "blockgof/fitters.hpp"
#include "blockgof/prob_matrix.hpp"

namespace blockgof {

class Network;

inline constexpr double kDefaultAlpha = 0.05;

struct ModelGof {
  Model model = Model::kDcmm;
  bool ok = false;        // false when the fitter threw; see error
  std::string error;
  CycleStats stats;
  bool reject = false;    // |T_n| >= z_{alpha/2}
  FitFlags flags;
};

struct GofReport {
  int n = 0;
  int k = 0;
  double alpha = kDefaultAlpha;
  double critical = 0.0;  // z_{alpha/2}
  std::int64_t c_n3 = 0;
  std::vector<ModelGof> models;  // SBM, DCBM, MMSBM, DCMM unless narrowed

  const ModelGof* find(Model model) const;
};

struct GofConfig {
  double alpha = kDefaultAlpha;
  FitOptions fit = data_mode_options();
  std::vector<Model> models = {Model::kSbm, Model::kDcbm, Model::kMmsbm, Model::kDcmm};
};

// Fits every requested model and evaluates T_n against each fit. Fitter
// failures are recorded per model. Throws UndefinedStatisticError when the
// network has no triangle.
GofReport gof_all(const Network& net, int k, const GofConfig& config = {});

struct EstimateKResult {
  int k = 0;                    // k_max + 1 when no K0 is accepted
  std::vector<double> t_values; // one per K0 tried; NaN where the fit failed
  std::vector<int> failed;      // K0 values whose fit threw
};

// Smallest K0 in 1..k_max whose DCBM fit gives |T_n| < z_{alpha/2}.
EstimateKResult estimate_k(const Network& net, int k_max, double alpha = kDefaultAlpha,
                           const FitOptions& options = data_mode_options());

struct SnrResult {
  Eigen::MatrixXd omega_tilde;
  double trace_diff3 = 0.0;   // tr((Omega - Omega_tilde)^3)
  double trace_omega3 = 0.0;  // tr(Omega^3)
  double snr = 0.0;
};

inline constexpr int kSnrMaxNodes = 5000;

// Applies the fitting map of `model` to Omega itself (SP, no
// regularization) and evaluates tr((Omega - Omega_tilde)^3) / sqrt(6 tr(Omega^3)).
SnrResult snr(const Eigen::MatrixXd& omega, Model model, int k,
              const FitOptions& options = {});

// sum_{j>K} lambda_j^3 / sqrt(6 sum_j lambda_j^3), eigenvalues ordered by
// decreasing magnitude: the SNR lower bound against a rank-K fit.
double higher_rank_snr_bound(const Eigen::MatrixXd& omega, int k);

// tr(M^3) for a dense symmetric matrix.
double trace_cube(const Eigen::MatrixXd& m);

struct NmfDiagnostics {
  bool feasible = false;
  Eigen::VectorXd tau;      // K leading eigenvalues of U^{-1} Omega
  Eigen::MatrixXd rho;      // n x K unit-norm eigenvectors
  Eigen::VectorXd weights;  // omega_k = u_bar / (rho_k' U rho_k)
  int positive_eigenvalues = 0;  // of Omega, among its K leading ones
  double lhs = 0.0;
  double bound = 0.0;       // 1 / (K - 1); 0 when K < 3
};

// Spectral sufficient condition for a rank-K matrix to factor as a DCMM.
// Throws ValidationError for a reducible Omega.
NmfDiagnostics nmf_feasibility(const Eigen::MatrixXd& omega, int k);

}  // namespace blockgof

#endif  // BLOCKGOF_GOF_HPP_
