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

#include "blockgof/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/rng.hpp"

namespace blockgof {

namespace {

// Indices of the k largest |values|, stable for equal magnitudes.
std::vector<int> top_by_magnitude(const Eigen::VectorXd& values, int k) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return std::abs(values(a)) > std::abs(values(b));
  });
  order.resize(k);
  return order;
}

void fix_signs(Eigen::MatrixXd& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    const double scale = vectors.col(c).cwiseAbs().maxCoeff();
    for (Eigen::Index r = 0; r < vectors.rows(); ++r) {
      const double x = vectors(r, c);
      if (std::abs(x) > 1e-12 * scale) {
        if (x < 0) vectors.col(c) *= -1.0;
        break;
      }
    }
  }
}

Embedding select(const Eigen::VectorXd& values, const Eigen::MatrixXd& vectors,
                 int k) {
  const auto order = top_by_magnitude(values, k);
  Embedding emb;
  emb.values.resize(k);
  emb.vectors.resize(vectors.rows(), k);
  for (int c = 0; c < k; ++c) {
    emb.values(c) = values(order[c]);
    emb.vectors.col(c) = vectors.col(order[c]);
  }
  fix_signs(emb.vectors);
  return emb;
}

void check_k(int n, int k) {
  if (k < 1 || k > n) {
    throw DimensionError("requested " + std::to_string(k) +
                         " eigenpairs from an order-" + std::to_string(n) +
                         " matrix");
  }
}

// Orthogonalizes v against the first `cols` columns of q (two passes).
void reorthogonalize(const Eigen::MatrixXd& q, int cols, Eigen::VectorXd& v) {
  if (cols == 0) return;
  for (int pass = 0; pass < 2; ++pass) {
    const Eigen::VectorXd h = q.leftCols(cols).transpose() * v;
    v.noalias() -= q.leftCols(cols) * h;
  }
}

Eigen::VectorXd random_unit(int n, Rng& rng) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v / v.norm();
}

// One Lanczos run with a basis of size m. Returns false if more steps are
// needed; on success fills `out`.
bool lanczos_pass(const SymMatrix& a, int k, int m, const EigOptions& options,
                  Embedding& out, std::vector<double>& residuals) {
  const int n = a.size();
  Rng rng(options.seed);
  Eigen::MatrixXd q(n, m);
  Eigen::VectorXd alpha = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);  // beta(j) couples j, j+1
  q.col(0) = random_unit(n, rng);
  double scale = 0.0;
  double last_beta = 0.0;
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXd w = a.multiply(Eigen::VectorXd(q.col(j)));
    alpha(j) = q.col(j).dot(w);
    scale = std::max(scale, std::abs(alpha(j)));
    reorthogonalize(q, j + 1, w);
    const double b = w.norm();
    scale = std::max(scale, b);
    if (j + 1 == m) {
      last_beta = b;
      break;
    }
    if (b <= 1e-12 * std::max(scale, 1.0)) {
      // Invariant subspace found: continue from a fresh orthogonal direction.
      beta(j) = 0.0;
      Eigen::VectorXd v = random_unit(n, rng);
      reorthogonalize(q, j + 1, v);
      const double nv = v.norm();
      if (nv <= 1e-12) {
        // The basis already spans the whole space.
        last_beta = 0.0;
        m = j + 1;
        break;
      }
      q.col(j + 1) = v / nv;
    } else {
      beta(j) = b;
      q.col(j + 1) = w / b;
    }
  }
  if (m < k) return false;

  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
  for (int j = 0; j < m; ++j) {
    t(j, j) = alpha(j);
    if (j + 1 < m) t(j, j + 1) = t(j + 1, j) = beta(j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
  const Eigen::VectorXd ritz = es.eigenvalues();
  const auto order = top_by_magnitude(ritz, k);
  const double lead = std::abs(ritz(order[0]));
  const double bound = options.tol * std::max(lead, 1e-300);

  residuals.assign(k, 0.0);
  bool converged = true;
  for (int c = 0; c < k; ++c) {
    const double est = std::abs(last_beta * es.eigenvectors()(m - 1, order[c]));
    residuals[c] = est;
    if (est > 0.5 * bound && lead > 0.0) converged = false;
  }
  if (!converged) return false;

  Eigen::MatrixXd vectors(n, k);
  Eigen::VectorXd values(k);
  for (int c = 0; c < k; ++c) {
    values(c) = ritz(order[c]);
    Eigen::VectorXd x = q.leftCols(m) * es.eigenvectors().col(order[c]);
    vectors.col(c) = x / x.norm();
  }
  // Confirm with explicit residuals.
  const Eigen::MatrixXd ax = a.multiply(vectors);
  for (int c = 0; c < k; ++c) {
    residuals[c] = (ax.col(c) - values(c) * vectors.col(c)).norm();
    if (residuals[c] > bound && lead > 0.0) return false;
  }
  out.values = values;
  out.vectors = vectors;
  fix_signs(out.vectors);
  return true;
}

}  // namespace

Embedding top_k_eigs_dense(const Eigen::MatrixXd& a, int k) {
  check_k(static_cast<int>(a.rows()), k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  if (es.info() != Eigen::Success) {
    throw SolverError("dense symmetric eigensolver failed", {});
  }
  return select(es.eigenvalues(), es.eigenvectors(), k);
}

Embedding top_k_eigs(const SymMatrix& a, int k, const EigOptions& options) {
  const int n = a.size();
  check_k(n, k);
  if (n <= options.dense_cutoff) {
    return top_k_eigs_dense(a.to_dense(), k);
  }
  int m = std::min(n, std::max(4 * k + 20, 60));
  std::vector<double> residuals;
  Embedding emb;
  for (;;) {
    if (lanczos_pass(a, k, m, options, emb, residuals)) return emb;
    if (m == n) break;
    m = std::min(n, 2 * m);
  }
  throw SolverError("Lanczos did not reach the residual bound", residuals);
}

Embedding top_k_eigs(const Network& net, int k, const EigOptions& options) {
  return top_k_eigs(SymMatrix::from_network(net), k, options);
}

ScoreRatio score_ratio(const Embedding& emb, double threshold) {
  const int k = emb.size();
  if (k < 2) throw DimensionError("SCORE ratios need at least two eigenvectors");
  const Eigen::Index n = emb.vectors.rows();
  ScoreRatio out;
  out.ratios.resize(n, k - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lead = emb.vectors(i, 0);
    if (lead == 0.0) {
      out.ratios.row(i).setConstant(threshold);
      ++out.zero_leading;
      continue;
    }
    for (int c = 1; c < k; ++c) {
      out.ratios(i, c - 1) =
          std::clamp(emb.vectors(i, c) / lead, -threshold, threshold);
    }
  }
  return out;
}

double default_score_threshold(int n) { return std::log(static_cast<double>(n)); }

}  // namespace blockgof
