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

#ifndef BLOCKGOF_TOOLS_COMMANDS_HPP_
#define BLOCKGOF_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "blockgof/prob_matrix.hpp"

namespace blockgof::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kFitFailure = 2;

struct CliConfig {
  std::string input;        // edge list, dense matrix or JSON config
  std::string output;       // empty means stdout
  std::string format = "csv";
  int k = 0;
  int k_max = 6;
  Model model = Model::kDcmm;
  double alpha = 0.05;
  std::string vh = "knnsp";
  int knn_neighbors = 0;    // 0 means tuned
  double knn_alpha = 0.0;   // 0 means tuned
  bool regularize = true;
  bool clip = true;
  bool giant_component = false;
  std::uint64_t seed = 1;
  int threads = 0;          // 0 keeps the config value
  int replicate = 0;
  std::string omega_out;
};

int cmd_gof(const CliConfig& cfg);
int cmd_fit(const CliConfig& cfg);
int cmd_simulate(const CliConfig& cfg);
int cmd_estimate_k(const CliConfig& cfg);
int cmd_snr(const CliConfig& cfg);
int cmd_nmf_check(const CliConfig& cfg);
int cmd_generate(const CliConfig& cfg);

}  // namespace blockgof::cli

#endif  // BLOCKGOF_TOOLS_COMMANDS_HPP_
