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

// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select criteria by number, e.g. "acceptance 1 6 7".

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "blockgof/cycles.hpp"
#include "blockgof/errors.hpp"
#include "blockgof/fitters.hpp"
#include "blockgof/gof.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/sim.hpp"
#include "support/oracles.hpp"

namespace blockgof {
namespace {

// Tolerances and budgets.
constexpr int kBrutePairs = 100;
constexpr int kBruteMaxN = 12;
constexpr double kBruteRelTol = 1e-8;
constexpr double kBruteSeconds = 10.0;

constexpr int kOracleInstances = 20;
constexpr int kOracleMaxN = 200;
constexpr double kOracleTol = 1e-8;
constexpr double kOracleSeconds = 30.0;

constexpr int kClosedFormInstances = 20;
constexpr double kClosedFormRelTol = 1e-8;

constexpr int kNullN = 800;
constexpr int kNullReps = 200;
constexpr double kNullMeanBound = 0.3;
constexpr double kNullVarLo = 0.7;
constexpr double kNullVarHi = 1.4;
constexpr double kNullRejectLo = 0.01;
constexpr double kNullRejectHi = 0.10;
constexpr double kNullSeconds = 20.0 * 60.0;
constexpr double kAlpha = 0.05;

constexpr int kPowerN = 1000;
constexpr int kPowerReps = 50;
constexpr double kPowerSbmMeanAbsMin = 5.0;
constexpr double kPowerDcmmMeanAbsMax = 1.0;
constexpr double kPowerSeconds = 5.0 * 60.0;

constexpr int kSnrVectors = 10;
constexpr int kSnrN = 100;
constexpr double kSnrRelTol = 1e-9;

constexpr double kKarateBand = 2.0;
constexpr double kKarateGoodFit = 5.0;
// SBM, DCBM, MMSBM, DCMM as published for the karate club network.
constexpr double kKarateReference[4] = {-1.744, 0.061, -1.483, 0.198};

constexpr int kNmfInstances = 10;
constexpr double kNmfTol = 1e-9;

constexpr int kEstimateN = 600;
constexpr int kEstimateK = 3;
constexpr double kEstimateB = 0.1;
constexpr double kEstimateAlphaN = 0.3;
constexpr int kEstimateReps = 50;
constexpr double kEstimateMinRate = 0.8;
constexpr int kEstimateKMax = 6;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

Outcome brute_force_equivalence() {
  const auto t0 = Clock::now();
  Rng rng(20240101);
  double worst = 0.0;
  int c_mismatch = 0;
  for (int rep = 0; rep < kBrutePairs; ++rep) {
    const int n = 3 + static_cast<int>(rng.below(kBruteMaxN - 2));
    const Network net = testing::erdos_renyi(n, rng.uniform(0.2, 0.9), rng);
    ProbMatrix omega;
    if (rep % 3 == 0) {
      omega = ProbMatrix::dense(testing::random_symmetric(n, 0.0, 1.0, rng));
    } else {
      const int k = 1 + static_cast<int>(rng.below(3));
      Eigen::VectorXd theta(n);
      Eigen::MatrixXd pi(n, k);
      for (int i = 0; i < n; ++i) {
        theta(i) = rng.uniform(0.2, 1.0);
        for (int c = 0; c < k; ++c) pi(i, c) = rng.uniform(0.0, 1.0);
      }
      omega = ProbMatrix::factored(theta, pi, testing::random_symmetric(k, 0.0, 1.0, rng),
                                   /*clip_to_unit=*/rep % 3 == 2);
    }
    const Eigen::MatrixXd a = testing::dense_adjacency(net);
    const double brute = testing::brute_signed_triangles(a - omega.to_dense());
    const double fast = u_n3(net, omega);
    worst = std::max(worst, std::abs(fast - brute) / std::abs(brute));
    c_mismatch += count_c3(net) != testing::brute_c3(a);
  }
  const double secs = seconds_since(t0);
  return {worst <= kBruteRelTol && c_mismatch == 0 && secs < kBruteSeconds,
          fmt("max rel err %.2e", worst) + ", C mismatches " + std::to_string(c_mismatch) +
              fmt(", %.2f s", secs)};
}

Outcome oracle_retrieval() {
  const auto t0 = Clock::now();
  Rng rng(777);
  double worst = 0.0;
  for (int rep = 0; rep < kOracleInstances; ++rep) {
    const int k = 2 + rep % 2;
    const int n = 50 + static_cast<int>(rng.below(kOracleMaxN - 49));
    const testing::DcmmInstance d = testing::random_dcmm(n, k, rng);
    const OracleParams o = oracle_retrieve(d.omega, net_round(d.pi));
    const std::vector<int> perm = testing::best_permutation(d.pi, o.pi);
    worst = std::max({worst, (o.theta - d.theta).cwiseAbs().maxCoeff(),
                      (testing::permute_columns(o.pi, perm) - d.pi).cwiseAbs().maxCoeff(),
                      (testing::permute_both(o.p, perm) - d.p).cwiseAbs().maxCoeff()});
  }
  const double secs = seconds_since(t0);
  return {worst <= kOracleTol && secs < kOracleSeconds,
          fmt("max param err %.2e", worst) + fmt(", %.2f s", secs)};
}

Outcome closed_form_identity() {
  double worst = 0.0;
  int fallbacks = 0;
  for (int rep = 0; rep < kClosedFormInstances; ++rep) {
    Rng rng(Rng::stream(31337, rep));
    const int k = 2 + rep % 2;
    SimConfig c = k == 2 ? experiment1(Model::kDcmm, 300) : experiment3_wrong_k(300);
    c.assumed_k = 0;
    const GeneratedOmega g = gen_omega(c, rng);
    const Network net = giant_component(sample_network(g.omega, rng));
    const FitResult f = fit(Model::kDcmm, net, k);  // SP, no regularization
    fallbacks += f.flags.vertex_fallback;
    const Eigen::MatrixXd closed =
        testing::closed_form_dcmm(testing::dense_adjacency(net), f.labels);
    worst = std::max(worst, (f.omega.to_dense() - closed).cwiseAbs().maxCoeff() /
                                closed.cwiseAbs().maxCoeff());
  }
  return {worst <= kClosedFormRelTol && fallbacks == 0,
          fmt("max rel err %.2e", worst) + ", identity fallbacks " + std::to_string(fallbacks)};
}

Outcome null_calibration() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<Model, std::vector<Model>>> plan = {
      {Model::kSbm, {Model::kSbm, Model::kDcbm, Model::kMmsbm, Model::kDcmm}},
      {Model::kDcbm, {Model::kDcbm, Model::kDcmm}},
      {Model::kMmsbm, {Model::kMmsbm, Model::kDcmm}},
      {Model::kDcmm, {Model::kDcmm}}};
  bool ok = true;
  std::string detail;
  for (const auto& [truth, assumed] : plan) {
    SimConfig c = experiment1(truth, kNullN);
    c.replicates = kNullReps;
    c.seed = 1000 + static_cast<int>(truth);
    c.assumed = assumed;
    c.alpha = kAlpha;
    const ExperimentResult r = run_experiment(c);
    for (const ModelSeries& s : r.series) {
      const bool pass = std::abs(s.mean) <= kNullMeanBound && s.variance >= kNullVarLo &&
                        s.variance <= kNullVarHi && s.rejection_rate >= kNullRejectLo &&
                        s.rejection_rate <= kNullRejectHi && s.failures == 0;
      ok = ok && pass;
      char buf[200];
      std::snprintf(buf, sizeof(buf),
                    "\n      %-5s -> %-5s mean %+.3f var %.3f reject %.3f failures %d %s",
                    std::string(model_name(truth)).c_str(),
                    std::string(model_name(s.model)).c_str(), s.mean, s.variance,
                    s.rejection_rate, s.failures, pass ? "ok" : "OUT OF BAND");
      detail += buf;
    }
  }
  const double secs = seconds_since(t0);
  ok = ok && secs <= kNullSeconds;
  return {ok, fmt("%.1f s", secs) + detail};
}

Outcome power_separation() {
  const auto t0 = Clock::now();
  SimConfig c = experiment1(Model::kDcmm, kPowerN);
  c.replicates = kPowerReps;
  c.seed = 4242;
  c.assumed = {Model::kSbm, Model::kDcmm};
  const ExperimentResult r = run_experiment(c);
  const ModelSeries* sbm = r.find(Model::kSbm);
  const ModelSeries* dcmm = r.find(Model::kDcmm);
  const double secs = seconds_since(t0);
  return {sbm->mean_abs > kPowerSbmMeanAbsMin && dcmm->mean_abs < kPowerDcmmMeanAbsMax &&
              sbm->failures == 0 && dcmm->failures == 0 && secs <= kPowerSeconds,
          fmt("mean|T| SBM %.2f", sbm->mean_abs) + fmt(", DCMM %.3f", dcmm->mean_abs) +
              fmt(", %.1f s", secs)};
}

Outcome snr_closed_form() {
  Rng rng(99);
  double worst = 0.0;
  for (int rep = 0; rep < kSnrVectors; ++rep) {
    Eigen::VectorXd theta(kSnrN);
    for (int i = 0; i < kSnrN; ++i) theta(i) = rng.uniform(0.05, 0.95);
    const SnrResult r = snr(theta * theta.transpose(), Model::kSbm, 1);
    const double s2 = theta.squaredNorm();
    const double nb2 = kSnrN * theta.mean() * theta.mean();
    const double expected = (s2 - nb2) * (s2 - nb2) * (s2 + 2.0 * nb2);
    worst = std::max(worst, std::abs(r.trace_diff3 - expected) / std::abs(expected));
  }
  return {worst <= kSnrRelTol, fmt("max rel err %.2e", worst)};
}

Outcome karate_regression() {
  const GofReport r = gof_all(testing::karate_club(), 2);
  bool ok = r.models.size() == 4;
  std::string detail;
  for (std::size_t m = 0; m < r.models.size(); ++m) {
    const double t = r.models[m].stats.t_n;
    ok = ok && r.models[m].ok && std::abs(t - kKarateReference[m]) <= kKarateBand &&
         std::abs(t) < kKarateGoodFit;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%s%s %.3f (ref %.3f)", m ? ", " : "",
                  std::string(model_name(r.models[m].model)).c_str(), t, kKarateReference[m]);
    detail += buf;
  }
  return {ok, detail};
}

Outcome nmf_check() {
  Rng rng(5150);
  double worst_tau = 0.0;
  double worst_rho = 0.0;
  int infeasible_k2 = 0;
  for (int rep = 0; rep < kNmfInstances; ++rep) {
    const int k = 2 + rep % 2;
    const int n = 40 + static_cast<int>(rng.below(80));
    const testing::DcmmInstance d = testing::random_dcmm(n, k, rng);
    const NmfDiagnostics diag = nmf_feasibility(d.omega, k);
    worst_tau = std::max(worst_tau, std::abs(diag.tau(0) - 1.0));
    const Eigen::VectorXd flat = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));
    worst_rho = std::max(worst_rho, (diag.rho.col(0) - flat).cwiseAbs().maxCoeff());
    if (k == 2 && !diag.feasible) ++infeasible_k2;
  }
  return {worst_tau <= kNmfTol && worst_rho <= kNmfTol && infeasible_k2 == 0,
          fmt("max |tau1 - 1| %.2e", worst_tau) + fmt(", max rho1 dev %.2e", worst_rho) +
              ", infeasible K=2 " + std::to_string(infeasible_k2)};
}

Outcome k_estimation() {
  SimConfig c;
  c.n = kEstimateN;
  c.k = kEstimateK;
  c.model = Model::kSbm;
  c.theta = {ThetaLaw::kConstant, 0.0, 0.0, kEstimateAlphaN};
  c.p_offdiag = kEstimateB;
  c.pi.mixed = MixedLaw::kNone;
  int hits = 0;
  std::string counts;
  for (int rep = 0; rep < kEstimateReps; ++rep) {
    Rng rng = Rng::stream(8080, rep);
    const GeneratedOmega g = gen_omega(c, rng);
    const Network net = giant_component(sample_network(g.omega, rng));
    const int k = estimate_k(net, kEstimateKMax, kAlpha, data_mode_options(rep + 1)).k;
    hits += k == kEstimateK;
    counts += std::to_string(k);
  }
  const double rate = static_cast<double>(hits) / kEstimateReps;
  return {rate >= kEstimateMinRate, fmt("hit rate %.2f", rate) + " (estimates " + counts + ")"};
}

}  // namespace
}  // namespace blockgof

int main(int argc, char** argv) {
  using blockgof::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"brute-force U/C equivalence", blockgof::brute_force_equivalence},
      {"oracle retrieval", blockgof::oracle_retrieval},
      {"closed-form fit identity", blockgof::closed_form_identity},
      {"null calibration at n=800", blockgof::null_calibration},
      {"power separation", blockgof::power_separation},
      {"SNR closed form", blockgof::snr_closed_form},
      {"karate regression", blockgof::karate_regression},
      {"NMF feasibility", blockgof::nmf_check},
      {"K estimation", blockgof::k_estimation},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));

  int failed = 0;
  for (std::size_t c = 0; c < criteria.size(); ++c) {
    const int id = static_cast<int>(c) + 1;
    if (!only.empty() && !only.count(id)) continue;
    Outcome o;
    try {
      o = criteria[c].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("[%s] %d. %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[c].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
