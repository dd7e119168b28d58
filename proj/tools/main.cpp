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

// blockgof: goodness-of-fit for block-model networks.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "blockgof/errors.hpp"
#include "commands.hpp"

namespace {

using blockgof::Model;
using blockgof::cli::CliConfig;

void add_fit_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--vh", cfg.vh, "vertex hunting: knnsp (default) or sp")
      ->check(CLI::IsMember({"sp", "knnsp"}));
  cmd->add_option("--knn-n", cfg.knn_neighbors, "KNN-SP neighbor count N (default: tuned)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--knn-alpha", cfg.knn_alpha, "KNN-SP radius divisor (default: tuned)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("!--no-regularize", cfg.regularize, "disable regularization");
  cmd->add_flag("!--no-clip", cfg.clip, "do not clip the fitted matrix to [0, 1]");
  cmd->add_option("--seed", cfg.seed, "seed for k-means restarts");
  cmd->add_flag("--giant-component", cfg.giant_component,
                "restrict to the largest connected component");
}

std::map<std::string, Model> model_map() {
  return {{"sbm", Model::kSbm}, {"dcbm", Model::kDcbm},
          {"mmsbm", Model::kMmsbm}, {"dcmm", Model::kDcmm}};
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = blockgof::cli;
  CLI::App app{"Goodness-of-fit tests for SBM, DCBM, MMSBM and DCMM network models"};
  app.require_subcommand(1);
  CliConfig cfg;
  const auto alpha_check = CLI::Range(0.0, 1.0).description("in (0, 1)");

  auto* gof = app.add_subcommand("gof", "T_n for all four models");
  gof->add_option("--input,-i", cfg.input, "edge list")->required()->check(CLI::ExistingFile);
  gof->add_option("--k,-k", cfg.k, "number of communities")->required()->check(CLI::PositiveNumber);
  gof->add_option("--alpha", cfg.alpha, "test level")->check(alpha_check);
  gof->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  gof->add_option("--output,-o", cfg.output, "report path (default stdout)");
  add_fit_flags(gof, cfg);

  auto* fit = app.add_subcommand("fit", "fit one model and print its parameters as JSON");
  fit->add_option("--input,-i", cfg.input)->required()->check(CLI::ExistingFile);
  fit->add_option("--k,-k", cfg.k)->required()->check(CLI::PositiveNumber);
  fit->add_option("--model,-m", cfg.model)
      ->required()
      ->transform(CLI::CheckedTransformer(model_map(), CLI::ignore_case));
  fit->add_option("--output,-o", cfg.output);
  add_fit_flags(fit, cfg);

  auto* sim = app.add_subcommand("simulate", "run a simulation experiment from a JSON config");
  sim->add_option("--config,-c", cfg.input)->required()->check(CLI::ExistingFile);
  sim->add_option("--out-dir,-o", cfg.output, "directory for replicates.csv, summary.json, histogram.csv");
  sim->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);

  auto* est = app.add_subcommand("estimate-k", "sequential DCBM test for the number of communities");
  est->add_option("--input,-i", cfg.input)->required()->check(CLI::ExistingFile);
  est->add_option("--kmax", cfg.k_max)->check(CLI::PositiveNumber);
  est->add_option("--alpha", cfg.alpha)->check(alpha_check);
  est->add_option("--format", cfg.format)->check(CLI::IsMember({"csv", "json"}));
  est->add_option("--output,-o", cfg.output);
  add_fit_flags(est, cfg);

  auto* snr = app.add_subcommand("snr", "signal-to-noise ratio of a dense probability matrix");
  snr->add_option("--omega", cfg.input)->required()->check(CLI::ExistingFile);
  snr->add_option("--assume,-m", cfg.model)
      ->required()
      ->transform(CLI::CheckedTransformer(model_map(), CLI::ignore_case));
  snr->add_option("--k,-k", cfg.k)->required()->check(CLI::PositiveNumber);
  snr->add_option("--seed", cfg.seed);
  snr->add_option("--output,-o", cfg.output);

  auto* nmf = app.add_subcommand("nmf-check", "DCMM factorization feasibility of a rank-K matrix");
  nmf->add_option("--omega", cfg.input)->required()->check(CLI::ExistingFile);
  nmf->add_option("--k,-k", cfg.k)->required()->check(CLI::PositiveNumber);
  nmf->add_option("--output,-o", cfg.output);

  auto* gen = app.add_subcommand("generate", "sample one network from a simulation config");
  gen->add_option("--config,-c", cfg.input)->required()->check(CLI::ExistingFile);
  gen->add_option("--replicate", cfg.replicate)->check(CLI::NonNegativeNumber);
  gen->add_option("--output,-o", cfg.output, "edge list path (default stdout)");
  gen->add_option("--omega-out", cfg.omega_out, "write the probability matrix here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) {
    std::cerr << "error: --alpha must lie strictly between 0 and 1\n";
    return cli::kUsage;
  }

  try {
    if (*gof) return cli::cmd_gof(cfg);
    if (*fit) return cli::cmd_fit(cfg);
    if (*sim) return cli::cmd_simulate(cfg);
    if (*est) return cli::cmd_estimate_k(cfg);
    if (*snr) return cli::cmd_snr(cfg);
    if (*nmf) return cli::cmd_nmf_check(cfg);
    if (*gen) return cli::cmd_generate(cfg);
  } catch (const blockgof::ConfigError& e) {
    std::cerr << "error: config " << e.what() << '\n';
    return cli::kUsage;
  } catch (const blockgof::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const blockgof::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const blockgof::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  } catch (const blockgof::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kFitFailure;
  }
  return cli::kUsage;
}
