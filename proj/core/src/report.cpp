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

#include "blockgof/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

namespace blockgof {
namespace {

using json = nlohmann::json;

constexpr int kIndent = 2;

std::string num(double v) {
  if (!std::isfinite(v)) return "NaN";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json vector_json(const Eigen::VectorXd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(number(v(i)));
  return a;
}

json rows_json(const Eigen::MatrixXd& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i).transpose()));
  return a;
}

json flags_json(const FitFlags& f) {
  return {{"simplex_fallback", f.simplex_fallback},
          {"vertex_fallback", f.vertex_fallback},
          {"pseudo_inverse", f.pseudo_inverse},
          {"small_cluster", f.small_cluster},
          {"negative_b1", f.negative_b1},
          {"nonpositive_z", f.nonpositive_z},
          {"truncated_rows", f.truncated_rows},
          {"knn_pruned", f.knn_pruned},
          {"knn_neighbors", f.knn_neighbors},
          {"knn_alpha", f.knn_alpha},
          {"clipped_offdiagonal", f.clipped_offdiagonal}};
}

const char* theta_law_name(ThetaLaw law) {
  switch (law) {
    case ThetaLaw::kUniform:
      return "uniform";
    case ThetaLaw::kInverseUniform:
      return "inverse_uniform";
    case ThetaLaw::kConstant:
      break;
  }
  return "constant";
}

const char* mixed_name(MixedLaw law) {
  switch (law) {
    case MixedLaw::kDirichlet:
      return "dirichlet";
    case MixedLaw::kTwoPoint:
      return "two_point";
    case MixedLaw::kNone:
      break;
  }
  return "none";
}

}  // namespace

std::string flags_string(const FitFlags& f) {
  std::vector<std::string> parts;
  if (f.simplex_fallback) parts.push_back("simplex_fallback");
  if (f.vertex_fallback) parts.push_back("vertex_fallback");
  if (f.pseudo_inverse) parts.push_back("pseudo_inverse");
  if (f.small_cluster) parts.push_back("small_cluster");
  if (f.negative_b1) parts.push_back("negative_b1=" + std::to_string(f.negative_b1));
  if (f.nonpositive_z) parts.push_back("nonpositive_z=" + std::to_string(f.nonpositive_z));
  if (f.truncated_rows) parts.push_back("truncated_rows=" + std::to_string(f.truncated_rows));
  if (f.knn_pruned) parts.push_back("knn_pruned=" + std::to_string(f.knn_pruned));
  if (f.clipped_offdiagonal) {
    parts.push_back("clipped=" + std::to_string(f.clipped_offdiagonal));
  }
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ';';
    out += p;
  }
  return out;
}

std::string decision_string(const ModelGof& m) {
  if (!m.ok) return "failed";
  if (!m.stats.defined) return "undefined";
  return m.reject ? "reject" : "accept";
}

void write_gof_csv(const GofReport& report, std::ostream& out) {
  out << "model,T_n,C_n3,decision,flags\n";
  for (const ModelGof& m : report.models) {
    std::string flags = m.ok ? flags_string(m.flags) : "error: " + m.error;
    for (char& c : flags) {
      if (c == ',' || c == '\n') c = ' ';
    }
    out << model_name(m.model) << ',' << (m.ok ? num(m.stats.t_n) : "NaN") << ','
        << report.c_n3 << ',' << decision_string(m) << ',' << flags << '\n';
  }
}

std::string gof_json(const GofReport& report) {
  json models = json::array();
  for (const ModelGof& m : report.models) {
    json e = {{"model", std::string(model_name(m.model))},
              {"decision", decision_string(m)}};
    if (m.ok) {
      e["T_n"] = number(m.stats.t_n);
      e["U_n3"] = number(m.stats.u_n3);
      e["flags"] = flags_json(m.flags);
    } else {
      e["T_n"] = nullptr;
      e["error"] = m.error;
    }
    models.push_back(std::move(e));
  }
  const json j = {{"n", report.n},
                  {"k", report.k},
                  {"alpha", report.alpha},
                  {"critical_value", report.critical},
                  {"C_n3", report.c_n3},
                  {"models", models}};
  return j.dump(kIndent);
}

std::string fit_json(const FitResult& fit) {
  const std::vector<int> order = community_order_by_size(fit);
  const int k = static_cast<int>(order.size());
  Eigen::MatrixXd pi(fit.pi.rows(), k);
  Eigen::MatrixXd p(k, k);
  for (int a = 0; a < k; ++a) {
    pi.col(a) = fit.pi.col(order[a]);
    for (int b = 0; b < k; ++b) p(a, b) = fit.p(order[a], order[b]);
  }
  std::vector<int> rank(k);
  for (int a = 0; a < k; ++a) rank[order[a]] = a;
  std::vector<int> labels;
  labels.reserve(fit.labels.labels.size());
  for (int l : fit.labels.labels) labels.push_back(rank[l]);

  json j = {{"model", std::string(model_name(fit.model))},
            {"k", fit.k},
            {"theta", vector_json(fit.theta)},
            {"pi", rows_json(pi)},
            {"p", rows_json(p)},
            {"labels", labels},
            {"flags", flags_json(fit.flags)}};
  return j.dump(kIndent);
}

std::string estimate_k_json(const EstimateKResult& r, double alpha) {
  json t = json::array();
  for (double v : r.t_values) t.push_back(number(v));
  const json j = {{"k", r.k}, {"alpha", alpha}, {"t_values", t}, {"failed", r.failed}};
  return j.dump(kIndent);
}

std::string snr_json(const SnrResult& r) {
  const json j = {{"trace_diff3", number(r.trace_diff3)},
                  {"trace_omega3", number(r.trace_omega3)},
                  {"snr", number(r.snr)}};
  return j.dump(kIndent);
}

std::string nmf_json(const NmfDiagnostics& d) {
  const json j = {{"feasible", d.feasible},
                  {"tau", vector_json(d.tau)},
                  {"weights", vector_json(d.weights)},
                  {"positive_eigenvalues", d.positive_eigenvalues},
                  {"lhs", number(d.lhs)},
                  {"bound", number(d.bound)}};
  return j.dump(kIndent);
}

std::string sim_config_json(const SimConfig& c) {
  json assumed = json::array();
  for (Model m : c.assumed) assumed.push_back(std::string(model_name(m)));
  json j = {{"schema_version", 1},
            {"n", c.n},
            {"k", c.k},
            {"model", std::string(model_name(c.model))},
            {"theta",
             {{"law", theta_law_name(c.theta.law)},
              {"a", c.theta.a},
              {"b", c.theta.b},
              {"alpha_n", c.theta.alpha_n}}},
            {"p_offdiag", c.p_offdiag},
            {"pi",
             {{"mixed", mixed_name(c.pi.mixed)},
              {"pure_per_community", c.pi.pure_per_community},
              {"concentration", c.pi.concentration},
              {"x", c.pi.x}}},
            {"replicates", c.replicates},
            {"seed", c.seed},
            {"assumed", assumed},
            {"assumed_k", c.assumed_k},
            {"alpha", c.alpha},
            {"vh", c.vh == VhMode::kKnnSp ? "knnsp" : "sp"},
            {"regularize", c.regularize},
            {"giant_component", c.giant_component},
            {"threads", c.threads}};
  if (c.p_matrix) j["p_matrix"] = rows_json(*c.p_matrix);
  return j.dump(kIndent);
}

void write_replicates_csv(const ExperimentResult& r, std::ostream& out) {
  out << "replicate";
  for (const ModelSeries& s : r.series) out << ",T_" << model_name(s.model);
  out << '\n';
  for (int i = 0; i < r.replicates; ++i) {
    out << i;
    for (const ModelSeries& s : r.series) out << ',' << num(s.t[i]);
    out << '\n';
  }
}

void write_histogram_csv(const ExperimentResult& r, std::ostream& out) {
  out << "model,bin_lo,bin_hi,count\n";
  for (const ModelSeries& s : r.series) {
    const Histogram& h = s.histogram;
    const double width = (h.hi - h.lo) / h.bins();
    const std::string name(model_name(s.model));
    out << name << ",-inf," << num(h.lo) << ',' << h.underflow << '\n';
    for (int b = 0; b < h.bins(); ++b) {
      out << name << ',' << num(h.lo + b * width) << ',' << num(h.lo + (b + 1) * width)
          << ',' << h.counts[b] << '\n';
    }
    out << name << ',' << num(h.hi) << ",inf," << h.overflow << '\n';
  }
}

std::string experiment_summary_json(const ExperimentResult& r) {
  json series = json::array();
  for (const ModelSeries& s : r.series) {
    series.push_back({{"model", std::string(model_name(s.model))},
                      {"failures", s.failures},
                      {"mean", number(s.mean)},
                      {"variance", number(s.variance)},
                      {"mean_abs", number(s.mean_abs)},
                      {"rejection_rate", number(s.rejection_rate)}});
  }
  const json j = {{"config", json::parse(sim_config_json(r.config))},
                  {"replicates", r.replicates},
                  {"critical_value", r.critical},
                  {"series", series}};
  return j.dump(kIndent);
}

}  // namespace blockgof
