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

#include "blockgof/vertex_hunting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "blockgof/errors.hpp"
#include "blockgof/rng.hpp"

namespace blockgof {

namespace {

// argmax over rows of ||x_i||, lowest index on ties; -1 if all zero.
int argmax_norm(const Eigen::MatrixXd& x, double& best_norm) {
  int best = -1;
  best_norm = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double v = x.row(i).squaredNorm();
    if (v > best_norm) {
      best_norm = v;
      best = static_cast<int>(i);
    }
  }
  best_norm = std::sqrt(best_norm);
  return best;
}

void fill_degenerate(const Eigen::MatrixXd& points, int k, VertexSet& out) {
  out.degenerate = true;
  for (int i = 0; static_cast<int>(out.source_indices.size()) < k; ++i) {
    if (std::find(out.source_indices.begin(), out.source_indices.end(), i) ==
        out.source_indices.end()) {
      out.source_indices.push_back(i);
    }
  }
  out.vertices.resize(k, points.cols());
  for (int c = 0; c < k; ++c) out.vertices.row(c) = points.row(out.source_indices[c]);
}

double squared_distance(const Eigen::MatrixXd& x, Eigen::Index i, Eigen::Index j) {
  return (x.row(i) - x.row(j)).squaredNorm();
}

}  // namespace

VertexSet successive_projection(const Eigen::MatrixXd& points, int k) {
  const Eigen::Index n = points.rows();
  const Eigen::Index d = points.cols();
  if (k < 1) throw DimensionError("SP needs K >= 1");
  if (n < k) {
    throw DimensionError("SP needs at least K = " + std::to_string(k) +
                         " points, got " + std::to_string(n));
  }
  if (d < k - 1) throw DimensionError("SP needs dimension d >= K - 1");

  VertexSet out;
  Eigen::MatrixXd residual = points;  // rows projected off chosen vertices
  for (int step = 1; step <= k; ++step) {
    if (step == d && d == k - 1) {
      // Residuals lie on a line: take its two end points.
      double norm = 0.0;
      const int pivot = argmax_norm(residual, norm);
      if (pivot < 0 || norm <= 1e-14) {
        fill_degenerate(points, k, out);
        return out;
      }
      const Eigen::RowVectorXd dir = residual.row(pivot) / norm;
      const Eigen::VectorXd coord = residual * dir.transpose();
      int lo = 0, hi = 0;
      for (Eigen::Index i = 1; i < n; ++i) {
        if (coord(i) < coord(lo)) lo = static_cast<int>(i);
        if (coord(i) > coord(hi)) hi = static_cast<int>(i);
      }
      if (lo == hi) {
        fill_degenerate(points, k, out);
        return out;
      }
      out.source_indices.push_back(lo);
      out.source_indices.push_back(hi);
      break;
    }
    double norm = 0.0;
    const int pick = argmax_norm(residual, norm);
    if (pick < 0 || norm <= 1e-14) {
      fill_degenerate(points, k, out);
      return out;
    }
    out.source_indices.push_back(pick);
    // Deflate along the new orthonormal direction (Gram-Schmidt on the
    // residual equals projecting onto span of all chosen vertices).
    const Eigen::RowVectorXd u = residual.row(pick) / norm;
    const Eigen::VectorXd proj = residual * u.transpose();
    residual.noalias() -= proj * u;
    // One re-orthogonalization pass keeps the deflation stable.
    const Eigen::VectorXd again = residual * u.transpose();
    residual.noalias() -= again * u;
  }
  out.vertices.resize(k, d);
  for (int c = 0; c < k; ++c) out.vertices.row(c) = points.row(out.source_indices[c]);
  return out;
}

VertexSet knn_successive_projection(const Eigen::MatrixXd& points, int k,
                                    const KnnSpParams& params) {
  if (params.neighbors < 1) throw ValidationError("KNN-SP needs N >= 1");
  if (!(params.alpha > 0.0)) throw ValidationError("KNN-SP needs alpha > 0");
  const Eigen::Index n = points.rows();
  if (n < k) {
    throw DimensionError("KNN-SP needs at least K = " + std::to_string(k) +
                         " points");
  }

  VertexSet out;
  double s_max_sq = 0.0;
  if (n <= kExactDiameterLimit) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        s_max_sq = std::max(s_max_sq, squared_distance(points, i, j));
      }
    }
  } else {
    // Farthest-point sweeps from a few seeds bound the diameter from below.
    out.approximate_diameter = true;
    Rng rng(0x243f6a8885a308d3ULL);
    for (int rep = 0; rep < 8; ++rep) {
      Eigen::Index a = static_cast<Eigen::Index>(rng.below(n));
      for (int sweep = 0; sweep < 3; ++sweep) {
        Eigen::Index far = a;
        double best = 0.0;
        for (Eigen::Index j = 0; j < n; ++j) {
          const double dd = squared_distance(points, a, j);
          if (dd > best) {
            best = dd;
            far = j;
          }
        }
        s_max_sq = std::max(s_max_sq, best);
        a = far;
      }
    }
  }
  const double radius = std::sqrt(s_max_sq) / params.alpha;
  const double radius_sq = radius * radius;

  std::vector<int> survivors;
  Eigen::MatrixXd smoothed(n, points.cols());
  std::vector<std::pair<double, int>> ball;
  for (Eigen::Index i = 0; i < n; ++i) {
    ball.clear();
    for (Eigen::Index j = 0; j < n; ++j) {
      const double dd = squared_distance(points, i, j);
      if (dd <= radius_sq) ball.emplace_back(dd, static_cast<int>(j));
    }
    const std::size_t keep =
        std::min<std::size_t>(ball.size(), static_cast<std::size_t>(params.neighbors));
    std::partial_sort(ball.begin(), ball.begin() + keep, ball.end());
    if (keep <= 2) continue;
    Eigen::RowVectorXd mean = Eigen::RowVectorXd::Zero(points.cols());
    for (std::size_t t = 0; t < keep; ++t) mean += points.row(ball[t].second);
    smoothed.row(static_cast<Eigen::Index>(survivors.size())) = mean / keep;
    survivors.push_back(static_cast<int>(i));
  }
  out.pruned = static_cast<int>(n - survivors.size());
  if (static_cast<int>(survivors.size()) < k) {
    throw ValidationError(
        "KNN-SP kept " + std::to_string(survivors.size()) +
        " points, fewer than K; use a smaller alpha or a larger N");
  }
  const Eigen::MatrixXd kept = smoothed.topRows(survivors.size());
  VertexSet sp = successive_projection(kept, k);
  out.vertices = std::move(sp.vertices);
  out.degenerate = sp.degenerate;
  out.source_indices.reserve(k);
  for (int idx : sp.source_indices) out.source_indices.push_back(survivors[idx]);
  return out;
}

}  // namespace blockgof
