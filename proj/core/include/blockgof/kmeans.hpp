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

#ifndef BLOCKGOF_KMEANS_HPP_
#define BLOCKGOF_KMEANS_HPP_

#include <vector>

#include <Eigen/Core>

#include "blockgof/rng.hpp"

namespace blockgof {

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 100;
};

struct KMeansResult {
  std::vector<int> labels;   // 0-based, canonicalized by first occurrence
  Eigen::MatrixXd centers;   // k x d, row c is the center of label c
  double within_ss = 0.0;
  int valid_restarts = 0;
};

// Lloyd's algorithm from k-means++ seeds; keeps the restart with the smallest
// within-cluster sum of squares. A restart that empties a cluster is
// discarded; if every restart does, throws FitError.
KMeansResult kmeans(const Eigen::MatrixXd& points, int k, Rng& rng,
                    const KMeansOptions& options = {});

// Relabels so that labels appear in order 0, 1, 2, ... along the rows.
std::vector<int> canonicalize_labels(const std::vector<int>& labels);

}  // namespace blockgof

#endif  // BLOCKGOF_KMEANS_HPP_
