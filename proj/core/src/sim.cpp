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

#include "blockgof/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "blockgof/cycles.hpp"
#include "blockgof/errors.hpp"
#include "blockgof/fitters.hpp"
#include "blockgof/stats.hpp"
#include "blockgof/sym_matrix.hpp"

namespace blockgof {
namespace {

using json = nlohmann::json;

Eigen::MatrixXd p_of(const SimConfig& c) {
  if (c.p_matrix) return *c.p_matrix;
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(c.k, c.k, c.p_offdiag);
  p.diagonal().setOnes();
  return p;
}

bool has_mixed(Model m) { return m == Model::kMmsbm || m == Model::kDcmm; }
bool has_degree(Model m) { return m == Model::kDcbm || m == Model::kDcmm; }

double draw_theta(const ThetaSpec& spec, Rng& rng) {
  switch (spec.law) {
    case ThetaLaw::kUniform:
      return rng.uniform(spec.a, spec.b);
    case ThetaLaw::kInverseUniform:
      return 1.0 / rng.uniform(spec.a, spec.b);
    case ThetaLaw::kConstant:
      break;
  }
  return std::sqrt(spec.alpha_n);
}

template <typename T>
T field(const json& j, const char* key, T fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + key, std::string("wrong type: ") + e.what());
  }
}

template <typename E>
E enum_field(const json& j, const char* key, E fallback, const std::string& path,
             std::initializer_list<std::pair<const char*, E>> names) {
  if (!j.contains(key)) return fallback;
  const std::string s = field<std::string>(j, key, "", path);
  for (const auto& [name, value] : names) {
    if (s == name) return value;
  }
  throw ConfigError(path + key, "unknown value '" + s + "'");
}

Model model_field(const json& j, const char* key, Model fallback, const std::string& path) {
  if (!j.contains(key)) return fallback;
  const auto m = parse_model(field<std::string>(j, key, "", path));
  if (!m) throw ConfigError(path + key, "unknown model");
  return *m;
}

}  // namespace

void validate(const SimConfig& c) {
  if (c.n < 3) throw ConfigError("n", "must be at least 3");
  if (c.k < 1 || c.k > c.n) throw ConfigError("k", "must lie in [1, n]");
  if (c.replicates < 1) throw ConfigError("replicates", "must be at least 1");
  if (!(c.alpha > 0.0 && c.alpha < 1.0)) throw ConfigError("alpha", "must lie in (0, 1)");
  if (c.threads < 1) throw ConfigError("threads", "must be at least 1");
  if (c.assumed.empty()) throw ConfigError("assumed", "needs at least one model");
  if (c.assumed_k < 0 || c.assumed_k > c.n) throw ConfigError("assumed_k", "out of range");

  const ThetaSpec& t = c.theta;
  if (t.law == ThetaLaw::kConstant) {
    if (!(t.alpha_n > 0.0)) throw ConfigError("theta.alpha_n", "must be positive");
  } else if (!(t.a > 0.0 && t.a < t.b)) {
    throw ConfigError("theta.a", "need 0 < a < b");
  }
  if (!has_degree(c.model) && t.law != ThetaLaw::kConstant) {
    throw ConfigError("theta.law", "SBM and MMSBM need the constant law");
  }

  if (c.p_matrix) {
    const Eigen::MatrixXd& p = *c.p_matrix;
    if (p.rows() != c.k || p.cols() != c.k) throw ConfigError("p_matrix", "must be K x K");
    if ((p - p.transpose()).cwiseAbs().maxCoeff() > 0.0) {
      throw ConfigError("p_matrix", "must be symmetric");
    }
    if (p.minCoeff() < 0.0) throw ConfigError("p_matrix", "entries must be nonnegative");
  } else if (!(c.p_offdiag >= 0.0)) {
    throw ConfigError("p_offdiag", "must be nonnegative");
  }

  const PiSpec& pi = c.pi;
  if (pi.mixed != MixedLaw::kNone) {
    if (!has_mixed(c.model)) throw ConfigError("pi.mixed", "SBM and DCBM have pure nodes only");
    if (!(pi.pure_per_community >= 0.0) || pi.pure_per_community * c.k > 1.0) {
      throw ConfigError("pi.pure_per_community", "need 0 <= K * fraction <= 1");
    }
    if (pi.mixed == MixedLaw::kDirichlet && !(pi.concentration > 0.0)) {
      throw ConfigError("pi.concentration", "must be positive");
    }
    if (pi.mixed == MixedLaw::kTwoPoint) {
      if (c.k != 2) throw ConfigError("pi.mixed", "two_point rows need K = 2");
      if (!(pi.x >= 0.0 && pi.x <= 1.0)) throw ConfigError("pi.x", "must lie in [0, 1]");
    }
  }
}

SimConfig parse_sim_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("", "top level must be an object");
  if (!j.contains("schema_version")) throw ConfigError("schema_version", "missing");
  if (field<int>(j, "schema_version", 0, "") != 1) {
    throw ConfigError("schema_version", "only version 1 is supported");
  }

  SimConfig c;
  c.n = field<int>(j, "n", c.n, "");
  c.k = field<int>(j, "k", c.k, "");
  c.model = model_field(j, "model", c.model, "");
  c.p_offdiag = field<double>(j, "p_offdiag", c.p_offdiag, "");
  c.replicates = field<int>(j, "replicates", c.replicates, "");
  c.seed = field<std::uint64_t>(j, "seed", c.seed, "");
  c.assumed_k = field<int>(j, "assumed_k", c.assumed_k, "");
  c.alpha = field<double>(j, "alpha", c.alpha, "");
  c.regularize = field<bool>(j, "regularize", c.regularize, "");
  c.giant_component = field<bool>(j, "giant_component", c.giant_component, "");
  c.threads = field<int>(j, "threads", c.threads, "");
  c.vh = enum_field(j, "vh", c.vh, "", {{"sp", VhMode::kSp}, {"knnsp", VhMode::kKnnSp}});

  if (j.contains("theta")) {
    const json& t = j.at("theta");
    if (!t.is_object()) throw ConfigError("theta", "must be an object");
    c.theta.law = enum_field(t, "law", c.theta.law, "theta.",
                             {{"constant", ThetaLaw::kConstant},
                              {"uniform", ThetaLaw::kUniform},
                              {"inverse_uniform", ThetaLaw::kInverseUniform}});
    c.theta.a = field<double>(t, "a", c.theta.a, "theta.");
    c.theta.b = field<double>(t, "b", c.theta.b, "theta.");
    c.theta.alpha_n = field<double>(t, "alpha_n", c.theta.alpha_n, "theta.");
  }
  if (j.contains("pi")) {
    const json& p = j.at("pi");
    if (!p.is_object()) throw ConfigError("pi", "must be an object");
    c.pi.mixed = enum_field(p, "mixed", c.pi.mixed, "pi.",
                            {{"none", MixedLaw::kNone},
                             {"dirichlet", MixedLaw::kDirichlet},
                             {"two_point", MixedLaw::kTwoPoint}});
    c.pi.pure_per_community =
        field<double>(p, "pure_per_community", c.pi.pure_per_community, "pi.");
    c.pi.concentration = field<double>(p, "concentration", c.pi.concentration, "pi.");
    c.pi.x = field<double>(p, "x", c.pi.x, "pi.");
  }
  if (j.contains("p_matrix")) {
    std::vector<std::vector<double>> rows;
    try {
      rows = j.at("p_matrix").get<std::vector<std::vector<double>>>();
    } catch (const json::exception&) {
      throw ConfigError("p_matrix", "must be an array of numeric rows");
    }
    Eigen::MatrixXd p(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != static_cast<std::size_t>(p.cols())) {
        throw ConfigError("p_matrix", "rows differ in length");
      }
      for (std::size_t s = 0; s < rows[r].size(); ++s) p(r, s) = rows[r][s];
    }
    c.p_matrix = p;
  }
  if (j.contains("assumed")) {
    const json& a = j.at("assumed");
    if (!a.is_array()) throw ConfigError("assumed", "must be an array of model names");
    c.assumed.clear();
    for (const json& e : a) {
      const auto m = e.is_string() ? parse_model(e.get<std::string>()) : std::nullopt;
      if (!m) throw ConfigError("assumed", "unknown model");
      c.assumed.push_back(*m);
    }
  }
  validate(c);
  return c;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("", "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_sim_config(ss.str());
}

GeneratedOmega gen_omega(const SimConfig& c, Rng& rng) {
  validate(c);
  const int n = c.n;
  const int k = c.k;
  GeneratedOmega g;
  ModelParams& m = g.params;
  m.p = p_of(c);
  m.theta.resize(n);
  for (int i = 0; i < n; ++i) m.theta(i) = draw_theta(c.theta, rng);

  m.pi = Eigen::MatrixXd::Zero(n, k);
  if (c.pi.mixed == MixedLaw::kNone) {
    for (int i = 0; i < n; ++i) {
      m.pi(i, static_cast<int>(static_cast<long long>(i) * k / n)) = 1.0;
    }
  } else {
    const int pure = static_cast<int>(std::floor(c.pi.pure_per_community * n));
    int i = 0;
    for (int comm = 0; comm < k; ++comm) {
      for (int s = 0; s < pure; ++s) m.pi(i++, comm) = 1.0;
    }
    const int mixed_start = i;
    const int mixed_count = n - mixed_start;
    for (; i < n; ++i) {
      if (c.pi.mixed == MixedLaw::kTwoPoint) {
        const bool first_half = (i - mixed_start) < mixed_count / 2;
        m.pi(i, 0) = first_half ? c.pi.x : 1.0 - c.pi.x;
        m.pi(i, 1) = 1.0 - m.pi(i, 0);
      } else {
        double total = 0.0;
        for (int comm = 0; comm < k; ++comm) {
          m.pi(i, comm) = rng.gamma(c.pi.concentration);
          total += m.pi(i, comm);
        }
        if (total > 0.0) {
          m.pi.row(i) /= total;
        } else {
          m.pi(i, static_cast<int>(rng.below(k))) = 1.0;
        }
      }
    }
  }

  const Eigen::MatrixXd f = m.theta.asDiagonal() * m.pi;
  g.omega = f * m.p * f.transpose();
  for (int col = 0; col < n; ++col) {
    for (int row = 0; row < n; ++row) {
      const double v = g.omega(row, col);
      if (v > 1.0 || v < 0.0) {
        throw ConfigError("omega", "entry (" + std::to_string(row) + ", " +
                                       std::to_string(col) + ") = " +
                                       std::to_string(v) + " is outside [0, 1]");
      }
    }
  }
  return g;
}

Network sample_network(const Eigen::MatrixXd& omega, Rng& rng) {
  const int n = static_cast<int>(omega.rows());
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.uniform() < omega(i, j)) edges.emplace_back(i, j);
    }
  }
  return Network::from_edges(n, edges);
}

void Histogram::add(double x) {
  if (x < lo) {
    ++underflow;
  } else if (x >= hi) {
    ++overflow;
  } else {
    const int b = std::min(bins() - 1, static_cast<int>((x - lo) / (hi - lo) * bins()));
    ++counts[b];
  }
}

const ModelSeries* ExperimentResult::find(Model model) const {
  for (const ModelSeries& s : series) {
    if (s.model == model) return &s;
  }
  return nullptr;
}

ExperimentResult run_experiment(const SimConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const int reps = config.replicates;
  const int fit_k = config.assumed_k > 0 ? config.assumed_k : config.k;
  const std::size_t models = config.assumed.size();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::vector<double>> t(models, std::vector<double>(reps, nan));

  auto replicate = [&](int r) {
    Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(r));
    const GeneratedOmega g = gen_omega(config, rng);
    const Network sampled = sample_network(g.omega, rng);
    const Network net = config.giant_component ? giant_component(sampled) : sampled;
    const SymMatrix a = SymMatrix::from_network(net);
    FitOptions options;
    options.vh = config.vh;
    options.regularize = config.regularize;
    options.seed = rng.next_u64();
    for (std::size_t m = 0; m < models; ++m) {
      try {
        const FitResult f = fit(config.assumed[m], a, fit_k, options);
        const CycleStats s = cycle_stats(net, f.omega);
        if (s.defined) t[m][r] = s.t_n;
      } catch (const Error&) {
        // Counted as a failure below.
      }
    }
  };

  // Config errors (e.g. an illegal Omega) surface before any thread starts.
  {
    Rng probe = Rng::stream(config.seed, 0);
    gen_omega(config, probe);
  }
  const int threads = std::min(config.threads, reps);
  if (threads <= 1) {
    for (int r = 0; r < reps; ++r) replicate(r);
  } else {
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = w; r < reps; r += threads) replicate(r);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  ExperimentResult out;
  out.config = config;
  out.replicates = reps;
  out.critical = two_sided_critical(config.alpha);
  for (std::size_t m = 0; m < models; ++m) {
    ModelSeries s;
    s.model = config.assumed[m];
    s.t = std::move(t[m]);
    std::vector<double> ok;
    int rejected = 0;
    for (double v : s.t) {
      if (!std::isfinite(v)) {
        ++s.failures;
        continue;
      }
      ok.push_back(v);
      s.histogram.add(v);
      s.mean_abs += std::abs(v);
      if (std::abs(v) >= out.critical) ++rejected;
    }
    if (!ok.empty()) {
      s.mean = mean(ok);
      s.variance = variance(ok);
      s.mean_abs /= static_cast<double>(ok.size());
      s.rejection_rate = static_cast<double>(rejected) / static_cast<double>(ok.size());
    }
    out.series.push_back(std::move(s));
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

ExperimentResult run_null_calibration(SimConfig config, Model assumed, double alpha) {
  if (!model_nested_in(config.model, assumed)) {
    throw ConfigError("assumed", std::string(model_name(config.model)) +
                                     " is not nested in " +
                                     std::string(model_name(assumed)));
  }
  if (config.assumed_k != 0 && config.assumed_k != config.k) {
    throw ConfigError("assumed_k", "null calibration fits the true K");
  }
  config.assumed = {assumed};
  config.alpha = alpha;
  return run_experiment(config);
}

ExperimentResult run_power(SimConfig config, Model assumed, double alpha) {
  config.assumed = {assumed};
  config.alpha = alpha;
  return run_experiment(config);
}

SimConfig experiment1(Model truth, int n, double b) {
  SimConfig c;
  c.n = n;
  c.k = 2;
  c.model = truth;
  c.p_offdiag = b;
  if (has_degree(truth)) {
    c.theta = {ThetaLaw::kUniform, 0.1, 0.3, 0.3};
  } else {
    c.theta = {ThetaLaw::kConstant, 0.1, 0.3, 0.3};
  }
  if (has_mixed(truth)) {
    c.pi.mixed = MixedLaw::kDirichlet;
    c.pi.pure_per_community = 0.125;
    c.pi.concentration = 0.5;
  } else {
    c.pi.mixed = MixedLaw::kNone;
  }
  c.assumed = {truth};
  return c;
}

SimConfig experiment2(int n, double b, double x, ThetaLaw law) {
  SimConfig c = experiment1(Model::kDcmm, n, b);
  c.pi.mixed = MixedLaw::kTwoPoint;
  c.pi.x = x;
  c.theta.law = law;
  if (law == ThetaLaw::kInverseUniform) {
    c.theta.a = 2.0;
    c.theta.b = 10.0;
  }
  c.replicates = 400;
  return c;
}

SimConfig experiment3_wrong_k(int n) {
  SimConfig c = experiment1(Model::kDcmm, n, 0.2);
  c.k = 3;
  c.pi.concentration = 1.0 / 3.0;
  c.assumed_k = 2;
  return c;
}

}  // namespace blockgof
