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

#ifndef BLOCKGOF_SIM_HPP_
#define BLOCKGOF_SIM_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "blockgof/graph.hpp"
#include "blockgof/membership.hpp"
#include "blockgof/prob_matrix.hpp"
#include "blockgof/rng.hpp"

namespace blockgof {

enum class ThetaLaw { kConstant, kUniform, kInverseUniform };

struct ThetaSpec {
  ThetaLaw law = ThetaLaw::kConstant;
  double a = 0.1;        // uniform(a, b), or 1/theta ~ uniform(a, b)
  double b = 0.3;
  double alpha_n = 0.3;  // constant law: theta_i = sqrt(alpha_n)
};

enum class MixedLaw { kNone, kDirichlet, kTwoPoint };

struct PiSpec {
  // Fraction of n that is pure in each community; ignored when every node
  // is pure (mixed == kNone).
  double pure_per_community = 0.125;
  MixedLaw mixed = MixedLaw::kNone;
  double concentration = 0.5;  // symmetric Dirichlet parameter
  double x = 0.25;             // two-point rows (x, 1-x) and (1-x, x)
};

struct SimConfig {
  int n = 800;
  int k = 2;
  Model model = Model::kDcmm;
  ThetaSpec theta;
  double p_offdiag = 0.05;
  std::optional<Eigen::MatrixXd> p_matrix;  // overrides p_offdiag
  PiSpec pi;
  int replicates = 200;
  std::uint64_t seed = 1;

  std::vector<Model> assumed = {Model::kDcmm};
  int assumed_k = 0;  // 0 means k
  double alpha = 0.05;
  VhMode vh = VhMode::kSp;
  bool regularize = false;
  // Fit each replicate on its largest connected component. Sparse draws
  // can leave isolated nodes, which the degree-corrected fitters reject.
  bool giant_component = true;
  int threads = 1;
};

// Throws ConfigError naming the first offending field.
void validate(const SimConfig& config);

// Parses the versioned JSON experiment schema (schema_version 1).
SimConfig parse_sim_config(const std::string& json_text);
SimConfig load_sim_config(const std::filesystem::path& path);

struct ModelParams {
  Eigen::VectorXd theta;
  Eigen::MatrixXd pi;  // n x K
  Eigen::MatrixXd p;   // K x K
};

struct GeneratedOmega {
  Eigen::MatrixXd omega;
  ModelParams params;
};

// Draws (Theta, Pi) per the config and forms Omega. Entries outside [0, 1]
// raise ConfigError naming the entry; nothing is clipped.
GeneratedOmega gen_omega(const SimConfig& config, Rng& rng);

// Independent Bernoulli(Omega(i, j)) edges for i < j.
Network sample_network(const Eigen::MatrixXd& omega, Rng& rng);

struct Histogram {
  double lo = -6.0;
  double hi = 6.0;
  std::vector<int> counts = std::vector<int>(40, 0);
  int underflow = 0;
  int overflow = 0;

  void add(double x);
  int bins() const { return static_cast<int>(counts.size()); }
};

struct ModelSeries {
  Model model = Model::kDcmm;
  std::vector<double> t;     // one per replicate; NaN where failed
  int failures = 0;
  double mean = 0.0;
  double variance = 0.0;
  double mean_abs = 0.0;
  double rejection_rate = 0.0;
  Histogram histogram;
};

struct ExperimentResult {
  SimConfig config;
  int replicates = 0;
  double critical = 0.0;
  std::vector<ModelSeries> series;  // one per assumed model
  double seconds = 0.0;

  const ModelSeries* find(Model model) const;
};

// Generates config.replicates networks and fits every assumed model to each.
// Replicate r draws from Rng::stream(seed, r), so results do not depend on
// the thread count.
ExperimentResult run_experiment(const SimConfig& config);

// Truth nested in the assumed model; throws ConfigError otherwise.
ExperimentResult run_null_calibration(SimConfig config, Model assumed, double alpha);
// Truth outside the assumed class (model or K); no nesting check.
ExperimentResult run_power(SimConfig config, Model assumed, double alpha);

// Preset experiment designs, scaled by n.
SimConfig experiment1(Model truth, int n, double b = 0.05);
SimConfig experiment2(int n = 2000, double b = 0.2, double x = 0.25,
                      ThetaLaw law = ThetaLaw::kUniform);
SimConfig experiment3_wrong_k(int n);

}  // namespace blockgof

#endif  // BLOCKGOF_SIM_HPP_
