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

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>

#include "blockgof/errors.hpp"
#include "blockgof/fitters.hpp"
#include "blockgof/gof.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/matrix_io.hpp"
#include "blockgof/report.hpp"
#include "blockgof/rng.hpp"
#include "blockgof/sim.hpp"

namespace blockgof::cli {
namespace {

void emit(const std::string& path, const std::function<void(std::ostream&)>& write) {
  if (path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  write(out);
}

Network load_network(const CliConfig& cfg) {
  LoadStats stats;
  Network net = load_edge_list(std::filesystem::path(cfg.input), &stats);
  if (stats.self_loops_dropped || stats.duplicates_collapsed) {
    std::cerr << "note: dropped " << stats.self_loops_dropped << " self-loops, collapsed "
              << stats.duplicates_collapsed << " duplicate edges\n";
  }
  if (cfg.giant_component) {
    net = giant_component(net);
    std::cerr << "note: giant component has " << net.num_nodes() << " nodes\n";
  }
  return net;
}

FitOptions fit_options(const CliConfig& cfg) {
  FitOptions o;
  o.vh = cfg.vh == "sp" ? VhMode::kSp : VhMode::kKnnSp;
  o.knn_neighbors = cfg.knn_neighbors;
  o.knn_alpha = cfg.knn_alpha;
  o.regularize = cfg.regularize;
  o.clip_omega = cfg.clip;
  o.seed = cfg.seed;
  return o;
}

}  // namespace

int cmd_gof(const CliConfig& cfg) {
  const Network net = load_network(cfg);
  GofConfig gc;
  gc.alpha = cfg.alpha;
  gc.fit = fit_options(cfg);
  const GofReport report = gof_all(net, cfg.k, gc);
  emit(cfg.output, [&](std::ostream& out) {
    if (cfg.format == "json") {
      out << gof_json(report) << '\n';
    } else {
      write_gof_csv(report, out);
    }
  });
  int code = kOk;
  for (const ModelGof& m : report.models) {
    if (!m.ok) {
      std::cerr << "error: " << model_name(m.model) << " fit failed: " << m.error << '\n';
      code = kFitFailure;
    }
  }
  return code;
}

int cmd_fit(const CliConfig& cfg) {
  const Network net = load_network(cfg);
  const FitResult f = fit(cfg.model, net, cfg.k, fit_options(cfg));
  emit(cfg.output, [&](std::ostream& out) { out << fit_json(f) << '\n'; });
  return kOk;
}

int cmd_simulate(const CliConfig& cfg) {
  SimConfig sc = load_sim_config(cfg.input);
  if (cfg.threads > 0) sc.threads = cfg.threads;
  const ExperimentResult r = run_experiment(sc);
  if (cfg.output.empty()) {
    std::cout << experiment_summary_json(r) << '\n';
    return kOk;
  }
  const std::filesystem::path dir(cfg.output);
  std::filesystem::create_directories(dir);
  emit((dir / "replicates.csv").string(),
       [&](std::ostream& out) { write_replicates_csv(r, out); });
  emit((dir / "histogram.csv").string(),
       [&](std::ostream& out) { write_histogram_csv(r, out); });
  emit((dir / "summary.json").string(),
       [&](std::ostream& out) { out << experiment_summary_json(r) << '\n'; });
  std::cerr << "wrote " << r.replicates << " replicates to " << dir.string() << " in "
            << r.seconds << " s\n";
  return kOk;
}

int cmd_estimate_k(const CliConfig& cfg) {
  const Network net = load_network(cfg);
  const EstimateKResult r = estimate_k(net, cfg.k_max, cfg.alpha, fit_options(cfg));
  emit(cfg.output, [&](std::ostream& out) {
    if (cfg.format == "json") {
      out << estimate_k_json(r, cfg.alpha) << '\n';
    } else {
      out << r.k << '\n';
    }
  });
  return kOk;
}

int cmd_snr(const CliConfig& cfg) {
  const Eigen::MatrixXd omega = read_dense_matrix(std::filesystem::path(cfg.input));
  FitOptions o;  // theory mode: SP, no regularization
  o.seed = cfg.seed;
  const SnrResult r = snr(omega, cfg.model, cfg.k, o);
  emit(cfg.output, [&](std::ostream& out) { out << snr_json(r) << '\n'; });
  return kOk;
}

int cmd_nmf_check(const CliConfig& cfg) {
  const Eigen::MatrixXd omega = read_dense_matrix(std::filesystem::path(cfg.input));
  const NmfDiagnostics d = nmf_feasibility(omega, cfg.k);
  emit(cfg.output, [&](std::ostream& out) { out << nmf_json(d) << '\n'; });
  return kOk;
}

int cmd_generate(const CliConfig& cfg) {
  const SimConfig sc = load_sim_config(cfg.input);
  Rng rng = Rng::stream(sc.seed, static_cast<std::uint64_t>(cfg.replicate));
  const GeneratedOmega g = gen_omega(sc, rng);
  const Network net = sample_network(g.omega, rng);
  emit(cfg.output, [&](std::ostream& out) { save_edge_list(net, out); });
  if (!cfg.omega_out.empty()) write_dense_matrix(g.omega, std::filesystem::path(cfg.omega_out));
  return kOk;
}

}  // namespace blockgof::cli
