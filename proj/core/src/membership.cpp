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

#include "blockgof/membership.hpp"

#include <cmath>
#include <string>

#include <Eigen/LU>

#include "blockgof/errors.hpp"
#include "blockgof/kmeans.hpp"

namespace blockgof {

Eigen::MatrixXd HardLabeling::to_matrix() const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(labels.size(), k);
  for (std::size_t i = 0; i < labels.size(); ++i) h(i, labels[i]) = 1.0;
  return h;
}

std::vector<int> HardLabeling::sizes() const {
  std::vector<int> s(k, 0);
  for (int l : labels) ++s[l];
  return s;
}

HardLabeling make_labeling(std::vector<int> labels, int k) {
  HardLabeling h;
  h.labels = std::move(labels);
  h.k = k;
  for (int l : h.labels) {
    if (l < 0 || l >= k) throw DimensionError("label out of range");
  }
  for (int s : h.sizes()) {
    if (s == 0) h.small_cluster = true;
  }
  return h;
}

VertexSet hunt_vertices(const Eigen::MatrixXd& points, int k,
                        const VertexHuntingChoice& vh) {
  if (vh.mode == VhMode::kKnnSp) return knn_successive_projection(points, k, vh.knn);
  return successive_projection(points, k);
}

int truncate_and_normalize(Eigen::MatrixXd& rows) {
  int empty = 0;
  rows = rows.cwiseMax(0.0);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const double s = rows.row(i).sum();
    if (s > 0.0) {
      rows.row(i) /= s;
    } else {
      rows.row(i).setConstant(1.0 / rows.cols());
      ++empty;
    }
  }
  return empty;
}

bool barycentric(const Eigen::MatrixXd& points, const Eigen::MatrixXd& vertices,
                 Eigen::MatrixXd& weights) {
  const Eigen::Index k = vertices.rows();
  // [V'; 1'] w = [r; 1]
  Eigen::MatrixXd system(k, k);
  system.topRows(k - 1) = vertices.transpose();
  system.row(k - 1).setOnes();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) return false;
  Eigen::MatrixXd rhs(k, points.rows());
  rhs.topRows(k - 1) = points.transpose();
  rhs.row(k - 1).setOnes();
  weights = lu.solve(rhs).transpose();
  return true;
}

MembershipMatrix mscore(const SymMatrix& a, int k, const MscoreOptions& options) {
  const int n = a.size();
  MembershipMatrix out;
  if (k == 1) {
    out.pi = Eigen::MatrixXd::Ones(n, 1);
    return out;
  }
  if (k < 1) throw DimensionError("MSCORE needs K >= 1");
  const Embedding emb = top_k_eigs(a, k, options.eig);
  const double t = options.threshold > 0.0 ? options.threshold
                                           : default_score_threshold(n);
  const ScoreRatio ratio = score_ratio(emb, t);
  VertexSet vs = hunt_vertices(ratio.ratios, k, options.vh);

  Eigen::MatrixXd w;
  if (!barycentric(ratio.ratios, vs.vertices, w)) {
    // Standard simplex {0, e_1, ..., e_{K-1}}.
    out.simplex_fallback = true;
    vs.vertices = Eigen::MatrixXd::Zero(k, k - 1);
    vs.vertices.bottomRows(k - 1).setIdentity();
    barycentric(ratio.ratios, vs.vertices, w);
  }

  Eigen::VectorXd b1(k);
  const Eigen::VectorXd tail = emb.values.tail(k - 1);
  for (int c = 0; c < k; ++c) {
    const Eigen::RowVectorXd v = vs.vertices.row(c);
    double arg = emb.values(0) + (v.array().square() * tail.transpose().array()).sum();
    if (arg <= 0.0) {
      ++out.negative_b1;
      arg = std::abs(arg);
    }
    b1(c) = arg > 0.0 ? 1.0 / std::sqrt(arg) : 1.0;
  }
  out.pi = w * b1.cwiseInverse().asDiagonal();
  out.empty_rows = truncate_and_normalize(out.pi);
  return out;
}

HardLabeling net_round(const Eigen::MatrixXd& pi) {
  std::vector<int> labels(pi.rows());
  for (Eigen::Index i = 0; i < pi.rows(); ++i) {
    int arg = 0;
    for (Eigen::Index c = 1; c < pi.cols(); ++c) {
      if (pi(i, c) > pi(i, arg)) arg = static_cast<int>(c);
    }
    labels[i] = arg;
  }
  return make_labeling(std::move(labels), static_cast<int>(pi.cols()));
}

namespace {

HardLabeling cluster_rows(const Eigen::MatrixXd& rows, int k,
                          const ClusterOptions& options) {
  Rng rng(options.seed);
  KMeansOptions km;
  km.restarts = options.restarts;
  km.max_iterations = options.max_iterations;
  KMeansResult res = kmeans(rows, k, rng, km);
  return make_labeling(std::move(res.labels), k);
}

}  // namespace

HardLabeling score_cluster(const SymMatrix& a, int k, const ClusterOptions& options) {
  const int n = a.size();
  if (k < 1) throw DimensionError("SCORE needs K >= 1");
  if (k == 1) return make_labeling(std::vector<int>(n, 0), 1);
  const Embedding emb = top_k_eigs(a, k, options.eig);
  const double t = options.threshold > 0.0 ? options.threshold
                                           : default_score_threshold(n);
  return cluster_rows(score_ratio(emb, t).ratios, k, options);
}

HardLabeling spectral_kmeans(const SymMatrix& a, int k, const ClusterOptions& options) {
  const int n = a.size();
  if (k < 1) throw DimensionError("spectral clustering needs K >= 1");
  if (k == 1) return make_labeling(std::vector<int>(n, 0), 1);
  const Embedding emb = top_k_eigs(a, k, options.eig);
  return cluster_rows(emb.vectors, k, options);
}

MembershipMatrix mmsbm_initial_pi(const SymMatrix& a, int k,
                                  const MmsbmInitOptions& options) {
  const int n = a.size();
  MembershipMatrix out;
  if (k == 1) {
    out.pi = Eigen::MatrixXd::Ones(n, 1);
    return out;
  }
  if (k < 1) throw DimensionError("MMSBM initialization needs K >= 1");
  const Embedding emb = top_k_eigs(a, k, options.eig);
  const VertexSet vs = hunt_vertices(emb.vectors, k, options.vh);
  // Columns of V* are the vertices.
  Eigen::MatrixXd v_star = vs.vertices.transpose();
  Eigen::FullPivLU<Eigen::MatrixXd> lu(v_star);
  lu.setThreshold(1e-12);
  if (!lu.isInvertible()) {
    out.simplex_fallback = true;
    v_star.setIdentity();
    lu.compute(v_star);
  }
  // pi_tilde_i = (V*)^{-1} xi_i, stacked as rows.
  out.pi = lu.solve(emb.vectors.transpose()).transpose();
  out.empty_rows = truncate_and_normalize(out.pi);
  return out;
}

}  // namespace blockgof
