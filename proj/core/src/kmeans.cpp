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

#include "blockgof/kmeans.hpp"

#include <limits>
#include <string>

#include "blockgof/errors.hpp"

namespace blockgof {

namespace {

Eigen::MatrixXd plus_plus_seeds(const Eigen::MatrixXd& x, int k, Rng& rng) {
  const Eigen::Index n = x.rows();
  Eigen::MatrixXd centers(k, x.cols());
  centers.row(0) = x.row(static_cast<Eigen::Index>(rng.below(n)));
  Eigen::VectorXd d2 = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      for (pick = 0; pick < n - 1; ++pick) {
        target -= d2(pick);
        if (target < 0.0) break;
      }
      // Never land on a zero-weight point because of rounding.
      while (d2(pick) == 0.0 && pick > 0) --pick;
    } else {
      pick = static_cast<Eigen::Index>(rng.below(n));
    }
    centers.row(c) = x.row(pick);
    d2 = d2.cwiseMin((x.rowwise() - centers.row(c)).rowwise().squaredNorm());
  }
  return centers;
}

}  // namespace

std::vector<int> canonicalize_labels(const std::vector<int>& labels) {
  std::vector<int> map;
  std::vector<int> out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int l = labels[i];
    if (l >= static_cast<int>(map.size())) map.resize(l + 1, -1);
    if (map[l] < 0) {
      int next = 0;
      for (int m : map) next += m >= 0 ? 1 : 0;
      map[l] = next;
    }
    out[i] = map[l];
  }
  return out;
}

KMeansResult kmeans(const Eigen::MatrixXd& points, int k, Rng& rng,
                    const KMeansOptions& options) {
  const Eigen::Index n = points.rows();
  if (k < 1 || n < k) {
    throw FitError("k-means needs 1 <= k <= n (k = " + std::to_string(k) +
                   ", n = " + std::to_string(n) + ")");
  }
  KMeansResult best;
  best.within_ss = std::numeric_limits<double>::infinity();
  std::vector<int> labels(n);
  for (int restart = 0; restart < options.restarts; ++restart) {
    Eigen::MatrixXd centers = plus_plus_seeds(points, k, rng);
    bool empty = false;
    double ss = 0.0;
    for (int iter = 0; iter < options.max_iterations; ++iter) {
      bool changed = iter == 0;
      ss = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        int arg = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (int c = 0; c < k; ++c) {
          const double dd = (points.row(i) - centers.row(c)).squaredNorm();
          if (dd < dist) {
            dist = dd;
            arg = c;
          }
        }
        if (labels[i] != arg) changed = true;
        labels[i] = arg;
        ss += dist;
      }
      Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
      std::vector<int> counts(k, 0);
      for (Eigen::Index i = 0; i < n; ++i) {
        sums.row(labels[i]) += points.row(i);
        ++counts[labels[i]];
      }
      for (int c = 0; c < k; ++c) {
        if (counts[c] == 0) {
          empty = true;
          break;
        }
        centers.row(c) = sums.row(c) / counts[c];
      }
      if (empty || !changed) break;
    }
    if (empty) continue;
    ++best.valid_restarts;
    if (ss < best.within_ss) {
      best.within_ss = ss;
      best.labels = labels;
      best.centers = centers;
    }
  }
  if (best.valid_restarts == 0) {
    throw FitError("k-means left a cluster empty in all " +
                   std::to_string(options.restarts) + " restarts");
  }
  // Reorder centers to match canonical labels.
  const std::vector<int> canon = canonicalize_labels(best.labels);
  Eigen::MatrixXd centers(k, points.cols());
  for (std::size_t i = 0; i < canon.size(); ++i) {
    centers.row(canon[i]) = best.centers.row(best.labels[i]);
  }
  best.centers = centers;
  best.labels = canon;
  return best;
}

}  // namespace blockgof
