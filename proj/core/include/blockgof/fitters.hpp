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

#ifndef BLOCKGOF_FITTERS_HPP_
#define BLOCKGOF_FITTERS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "blockgof/membership.hpp"
#include "blockgof/prob_matrix.hpp"
#include "blockgof/spectral.hpp"
#include "blockgof/sym_matrix.hpp"

namespace blockgof {

class Network;

struct FitOptions {
  VhMode vh = VhMode::kSp;
  // KNN-SP overrides; non-positive values are tuned from the degrees.
  int knn_neighbors = 0;
  double knn_alpha = 0.0;
  // Regularization: truncate negative weights and clip negative P entries
  // (DCMM), clip Omega to [0, 1] when clip_omega is also set.
  bool regularize = false;
  bool clip_omega = true;
  double score_threshold = 0.0;  // <= 0 means log(n)
  std::uint64_t seed = 1;        // k-means restarts
  int kmeans_restarts = 10;
  EigOptions eig;
};

// Options used by data-analysis entry points: KNN-SP with tuned
// parameters and regularization on.
FitOptions data_mode_options(std::uint64_t seed = 1);

struct FitFlags {
  bool simplex_fallback = false;  // MSCORE vertex matrix singular
  bool vertex_fallback = false;   // V_H singular, reset to identity
  bool pseudo_inverse = false;    // H'AH singular, ridge inverse used
  bool small_cluster = false;     // net rounding left a community empty
  int negative_b1 = 0;
  int nonpositive_z = 0;          // |.| or unit guard on diag(Z_H)
  int truncated_rows = 0;         // rows reset to uniform after truncation
  int knn_pruned = 0;
  int knn_neighbors = 0;          // tuning actually used (KNN-SP only)
  double knn_alpha = 0.0;
  std::size_t clipped_offdiagonal = 0;
};

struct FitResult {
  Model model = Model::kDcmm;
  int k = 1;
  ProbMatrix omega;
  HardLabeling labels;     // H
  Eigen::VectorXd theta;
  Eigen::MatrixXd pi;      // n x K
  Eigen::MatrixXd p;       // K x K; for SBM and MMSBM this is alpha_n P
  // DCMM internals; empty for the other models.
  Eigen::MatrixXd v_h;     // K x K, row k is vertex k
  Eigen::MatrixXd w;       // n x K barycentric weights
  Eigen::MatrixXd z_h;     // K x K
  Eigen::VectorXd p_eta;   // K
  FitFlags flags;
};

FitResult fit_dcmm(const SymMatrix& a, int k, const FitOptions& options = {});
FitResult fit_mmsbm(const SymMatrix& a, int k, const FitOptions& options = {});
FitResult fit_dcbm(const SymMatrix& a, int k, const FitOptions& options = {});
FitResult fit_sbm(const SymMatrix& a, int k, const FitOptions& options = {});
FitResult fit(Model model, const SymMatrix& a, int k,
              const FitOptions& options = {});
FitResult fit(Model model, const Network& net, int k,
              const FitOptions& options = {});

struct OracleParams {
  Eigen::VectorXd theta;
  Eigen::MatrixXd pi;  // n x K, columns ordered as the labels of H
  Eigen::MatrixXd p;
};

// Exact parameter retrieval from a population matrix and a hard labeling
// whose blocks each contain the pure nodes of one community. Throws
// FitError when the rows of Omega H do not span a K-vertex simplex.
OracleParams oracle_retrieve(const Eigen::MatrixXd& omega,
                             const HardLabeling& h);

// Column order putting communities in decreasing estimated size (ties by
// index). Reporting only; the fitted matrix is order invariant.
std::vector<int> community_order_by_size(const FitResult& fit);

}  // namespace blockgof

#endif  // BLOCKGOF_FITTERS_HPP_
