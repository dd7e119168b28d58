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

#include "blockgof/fitters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/LU>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"

namespace blockgof {
namespace {

constexpr double kRidge = 1e-10;
constexpr double kSingularThreshold = 1e-12;

Eigen::MatrixXd symmetrize(const Eigen::MatrixXd& m) {
  return 0.5 * (m + m.transpose());
}

Eigen::VectorXd positive_degrees(const SymMatrix& a) {
  Eigen::VectorXd d = a.row_sums();
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (!(d(i) > 0.0)) {
      throw ValidationError("node " + std::to_string(i) +
                            " has zero degree; remove isolated nodes first");
    }
  }
  return d;
}

bool invertible(const Eigen::MatrixXd& m) {
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(kSingularThreshold);
  return lu.isInvertible();
}

// Exact inverse, or the ridge pseudo-inverse G (G^2 + eps I)^{-1} when G is
// numerically singular.
Eigen::MatrixXd guarded_inverse(const Eigen::MatrixXd& g, bool* used_ridge) {
  if (invertible(g)) {
    *used_ridge = false;
    return symmetrize(g.inverse());
  }
  *used_ridge = true;
  const double scale = g.squaredNorm();
  const double eps = kRidge * (scale > 0.0 ? scale : 1.0);
  const Eigen::MatrixXd reg =
      g * g + eps * Eigen::MatrixXd::Identity(g.rows(), g.cols());
  return symmetrize(g * reg.inverse());
}

VertexHuntingChoice resolve_vh(const FitOptions& options, const Eigen::VectorXd& degrees,
                               int k, FitFlags* flags) {
  VertexHuntingChoice vh;
  vh.mode = options.vh;
  if (vh.mode != VhMode::kKnnSp) return vh;
  KnnSpTuning tuned{};
  if (options.knn_neighbors <= 0 || options.knn_alpha <= 0.0) {
    DegreeStats stats;
    stats.d_min = degrees.minCoeff();
    stats.d_max = degrees.maxCoeff();
    stats.d_bar = degrees.mean();
    tuned = knnsp_tuning(static_cast<int>(degrees.size()), stats, k);
  }
  vh.knn.neighbors = options.knn_neighbors > 0 ? options.knn_neighbors : tuned.neighbors;
  vh.knn.alpha = options.knn_alpha > 0.0 ? options.knn_alpha : tuned.alpha;
  flags->knn_neighbors = vh.knn.neighbors;
  flags->knn_alpha = vh.knn.alpha;
  return vh;
}

Eigen::MatrixXd hunt_or_identity(const Eigen::MatrixXd& points, int k,
                                 const VertexHuntingChoice& vh, FitFlags* flags) {
  const VertexSet vs = hunt_vertices(points, k, vh);
  flags->knn_pruned = vs.pruned;
  if (vs.degenerate || !invertible(vs.vertices)) {
    flags->vertex_fallback = true;
    return Eigen::MatrixXd::Identity(k, k);
  }
  return vs.vertices;
}

// W = R V^{-1}, stacked as rows.
Eigen::MatrixXd weights(const Eigen::MatrixXd& r, const Eigen::MatrixXd& v) {
  return v.transpose().fullPivLu().solve(r.transpose()).transpose();
}

struct DcmmCore {
  Eigen::MatrixXd w, z, pi, p;
  Eigen::VectorXd p_eta, theta;
  int nonpositive_z = 0;
  int truncated_rows = 0;
};

// Steps shared by the data fitter and the oracle: given R_H, V_H, the
// (pseudo-)inverse of H'AH and the degrees, build (Theta, Pi, P).
DcmmCore dcmm_from_vertices(const Eigen::MatrixXd& r, const Eigen::MatrixXd& v,
                            const Eigen::MatrixXd& g_inv, const Eigen::VectorXd& d,
                            bool regularize) {
  const Eigen::Index n = r.rows();
  const Eigen::Index k = v.rows();
  DcmmCore c;
  c.w = weights(r, v);
  if (regularize) c.truncated_rows = truncate_and_normalize(c.w);

  c.z = symmetrize(v * g_inv * v.transpose());
  Eigen::VectorXd z_abs(k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const double z = c.z(j, j);
    if (z <= 0.0) ++c.nonpositive_z;
    z_abs(j) = z == 0.0 ? 1.0 : std::abs(z);
  }
  c.p_eta = z_abs.cwiseSqrt().cwiseInverse();

  c.pi = c.w * c.p_eta.cwiseInverse().asDiagonal();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s = c.pi.row(i).sum();
    if (s != 0.0) {
      c.pi.row(i) /= s;
    } else {
      c.pi.row(i).setConstant(1.0 / static_cast<double>(k));
      ++c.truncated_rows;
    }
  }

  const Eigen::VectorXd scale = c.p_eta;  // |diag Z|^{-1/2}
  c.p = symmetrize(scale.asDiagonal() * c.z * scale.asDiagonal());
  if (regularize) c.p = c.p.cwiseMax(0.0);

  const Eigen::VectorXd denom = c.pi * c.p_eta;
  c.theta.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    c.theta(i) = denom(i) != 0.0 ? d(i) / denom(i) : 0.0;
  }
  return c;
}

void check_k(const SymMatrix& a, int k) {
  if (k < 1) throw DimensionError("K must be at least 1");
  if (k > a.size()) throw DimensionError("K exceeds the number of nodes");
}

}  // namespace

FitOptions data_mode_options(std::uint64_t seed) {
  FitOptions o;
  o.vh = VhMode::kKnnSp;
  o.regularize = true;
  o.seed = seed;
  return o;
}

FitResult fit_dcmm(const SymMatrix& a, int k, const FitOptions& options) {
  check_k(a, k);
  FitResult out;
  out.model = Model::kDcmm;
  out.k = k;
  const Eigen::VectorXd d = positive_degrees(a);
  const VertexHuntingChoice vh = resolve_vh(options, d, k, &out.flags);

  MscoreOptions mo;
  mo.vh = vh;
  mo.threshold = options.score_threshold;
  mo.eig = options.eig;
  const MembershipMatrix initial = mscore(a, k, mo);
  out.flags.simplex_fallback = initial.simplex_fallback;
  out.flags.negative_b1 = initial.negative_b1;

  out.labels = net_round(initial);
  out.flags.small_cluster = out.labels.small_cluster;
  const Eigen::MatrixXd h = out.labels.to_matrix();
  const Eigen::MatrixXd ah = a.multiply(h);
  const Eigen::MatrixXd r = d.cwiseInverse().asDiagonal() * ah;

  out.v_h = hunt_or_identity(r, k, vh, &out.flags);
  const Eigen::MatrixXd g = symmetrize(h.transpose() * ah);
  const Eigen::MatrixXd g_inv = guarded_inverse(g, &out.flags.pseudo_inverse);

  DcmmCore c = dcmm_from_vertices(r, out.v_h, g_inv, d, options.regularize);
  out.flags.nonpositive_z = c.nonpositive_z;
  out.flags.truncated_rows = c.truncated_rows;
  out.w = std::move(c.w);
  out.z_h = std::move(c.z);
  out.p_eta = std::move(c.p_eta);
  out.theta = std::move(c.theta);
  out.pi = std::move(c.pi);
  out.p = std::move(c.p);
  out.omega = ProbMatrix::factored(out.theta, out.pi, out.p,
                                   options.regularize && options.clip_omega);
  out.flags.clipped_offdiagonal = out.omega.clipped_offdiagonal();
  return out;
}

FitResult fit_mmsbm(const SymMatrix& a, int k, const FitOptions& options) {
  check_k(a, k);
  const int n = a.size();
  FitResult out;
  out.model = Model::kMmsbm;
  out.k = k;
  const bool clip = options.regularize && options.clip_omega;
  if (k == 1) {
    // Single community: Pi = 1_n, so Omega is the mean density.
    out.labels = make_labeling(std::vector<int>(n, 0), 1);
    out.pi = Eigen::MatrixXd::Ones(n, 1);
    out.theta = Eigen::VectorXd::Ones(n);
    out.p = Eigen::MatrixXd::Constant(1, 1, a.row_sums().sum() /
                                                (static_cast<double>(n) * n));
    out.omega = ProbMatrix::factored(out.theta, out.pi, out.p, clip);
    out.flags.clipped_offdiagonal = out.omega.clipped_offdiagonal();
    return out;
  }
  const Eigen::VectorXd d = a.row_sums();
  const VertexHuntingChoice vh = resolve_vh(options, d, k, &out.flags);

  MmsbmInitOptions mo;
  mo.vh = vh;
  mo.eig = options.eig;
  const MembershipMatrix initial = mmsbm_initial_pi(a, k, mo);
  out.flags.simplex_fallback = initial.simplex_fallback;
  out.flags.truncated_rows = initial.empty_rows;

  out.labels = net_round(initial);
  out.flags.small_cluster = out.labels.small_cluster;
  const Eigen::MatrixXd h = out.labels.to_matrix();
  const Eigen::MatrixXd ah = a.multiply(h);
  out.v_h = hunt_or_identity(ah, k, vh, &out.flags);

  out.w = weights(ah, out.v_h);
  if (options.regularize) out.flags.truncated_rows += truncate_and_normalize(out.w);
  out.pi = out.w;

  const Eigen::MatrixXd ptp = out.pi.transpose() * out.pi;
  if (!invertible(ptp)) throw FitError("MMSBM fit: Pi'Pi is singular");
  const Eigen::MatrixXd ptp_inv = ptp.inverse();
  out.p = symmetrize(ptp_inv * a.bilinear(out.pi, out.pi) * ptp_inv);
  out.theta = Eigen::VectorXd::Ones(n);
  out.omega = ProbMatrix::factored(out.theta, out.pi, out.p, clip);
  out.flags.clipped_offdiagonal = out.omega.clipped_offdiagonal();
  return out;
}

FitResult fit_dcbm(const SymMatrix& a, int k, const FitOptions& options) {
  check_k(a, k);
  FitResult out;
  out.model = Model::kDcbm;
  out.k = k;
  ClusterOptions co;
  co.threshold = options.score_threshold;
  co.seed = options.seed;
  co.restarts = options.kmeans_restarts;
  co.eig = options.eig;
  out.labels = score_cluster(a, k, co);
  out.flags.small_cluster = out.labels.small_cluster;
  out.pi = out.labels.to_matrix();

  const Eigen::MatrixXd m = symmetrize(a.bilinear(out.pi, out.pi));
  for (int c = 0; c < k; ++c) {
    if (!(m(c, c) > 0.0)) {
      throw FitError("DCBM fit: community " + std::to_string(c) +
                     " has no internal edges");
    }
  }
  const Eigen::VectorXd s = m.diagonal().cwiseSqrt();
  const Eigen::VectorXd s_inv = s.cwiseInverse();
  out.p = symmetrize(s_inv.asDiagonal() * m * s_inv.asDiagonal());
  const Eigen::VectorXd m1 = m.rowwise().sum();
  const Eigen::VectorXd d = a.row_sums();
  out.theta.resize(a.size());
  for (int i = 0; i < a.size(); ++i) {
    const int c = out.labels.labels[i];
    out.theta(i) = d(i) * s(c) / m1(c);
  }
  out.omega = ProbMatrix::factored(out.theta, out.pi, out.p,
                                   options.regularize && options.clip_omega);
  out.flags.clipped_offdiagonal = out.omega.clipped_offdiagonal();
  return out;
}

FitResult fit_sbm(const SymMatrix& a, int k, const FitOptions& options) {
  check_k(a, k);
  FitResult out;
  out.model = Model::kSbm;
  out.k = k;
  ClusterOptions co;
  co.seed = options.seed;
  co.restarts = options.kmeans_restarts;
  co.eig = options.eig;
  out.labels = spectral_kmeans(a, k, co);
  out.flags.small_cluster = out.labels.small_cluster;
  out.pi = out.labels.to_matrix();

  const Eigen::MatrixXd m = symmetrize(a.bilinear(out.pi, out.pi));
  Eigen::VectorXd sizes(k);
  const std::vector<int> counts = out.labels.sizes();
  for (int c = 0; c < k; ++c) {
    if (counts[c] == 0) throw FitError("SBM fit: empty community " + std::to_string(c));
    sizes(c) = counts[c];
  }
  const Eigen::VectorXd inv = sizes.cwiseInverse();
  out.p = symmetrize(inv.asDiagonal() * m * inv.asDiagonal());
  out.theta = Eigen::VectorXd::Ones(a.size());
  out.omega = ProbMatrix::factored(out.theta, out.pi, out.p,
                                   options.regularize && options.clip_omega);
  out.flags.clipped_offdiagonal = out.omega.clipped_offdiagonal();
  return out;
}

FitResult fit(Model model, const SymMatrix& a, int k, const FitOptions& options) {
  switch (model) {
    case Model::kSbm:
      return fit_sbm(a, k, options);
    case Model::kDcbm:
      return fit_dcbm(a, k, options);
    case Model::kMmsbm:
      return fit_mmsbm(a, k, options);
    case Model::kDcmm:
      break;
  }
  return fit_dcmm(a, k, options);
}

FitResult fit(Model model, const Network& net, int k, const FitOptions& options) {
  return fit(model, SymMatrix::from_network(net), k, options);
}

OracleParams oracle_retrieve(const Eigen::MatrixXd& omega, const HardLabeling& h) {
  const Eigen::Index n = omega.rows();
  const int k = h.k;
  if (omega.cols() != n || static_cast<Eigen::Index>(h.labels.size()) != n) {
    throw DimensionError("oracle: Omega and H sizes differ");
  }
  const SymMatrix a(omega);
  const Eigen::VectorXd d = positive_degrees(a);
  const Eigen::MatrixXd hm = h.to_matrix();
  const Eigen::MatrixXd oh = omega * hm;
  const Eigen::MatrixXd r = d.cwiseInverse().asDiagonal() * oh;

  VertexSet vs = successive_projection(r, k);
  if (vs.degenerate || !invertible(vs.vertices)) {
    throw FitError("oracle: rows of Omega H span fewer than K vertices");
  }
  // Name each vertex after the label of its source row when those labels
  // are a permutation, so the columns of Pi follow H.
  std::vector<int> slot(k, -1);
  for (int j = 0; j < k; ++j) {
    const int c = h.labels[vs.source_indices[j]];
    if (slot[c] < 0) slot[c] = j;
  }
  if (std::find(slot.begin(), slot.end(), -1) == slot.end()) {
    Eigen::MatrixXd ordered(k, vs.vertices.cols());
    for (int c = 0; c < k; ++c) ordered.row(c) = vs.vertices.row(slot[c]);
    vs.vertices = ordered;
  }
  // Every row must lie in the hull of the K extreme rows.
  const Eigen::MatrixXd w = weights(r, vs.vertices);
  const double tol = 1e-9 * std::max(1.0, w.cwiseAbs().maxCoeff());
  if (w.minCoeff() < -tol) {
    throw FitError("oracle: convex hull of the rows of Omega H does not have K vertices");
  }
  const Eigen::MatrixXd g = symmetrize(hm.transpose() * oh);
  if (!invertible(g)) throw FitError("oracle: H' Omega H is singular");

  const DcmmCore c = dcmm_from_vertices(r, vs.vertices, symmetrize(g.inverse()), d,
                                        /*regularize=*/false);
  return {c.theta, c.pi, c.p};
}

std::vector<int> community_order_by_size(const FitResult& fit) {
  const Eigen::VectorXd mass = fit.pi.colwise().sum().transpose();
  std::vector<int> order(mass.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return mass(x) > mass(y); });
  return order;
}

}  // namespace blockgof
