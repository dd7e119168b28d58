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

#ifndef BLOCKGOF_VERTEX_HUNTING_HPP_
#define BLOCKGOF_VERTEX_HUNTING_HPP_

#include <vector>

#include <Eigen/Core>

namespace blockgof {

// Estimated simplex vertices, one per row.
struct VertexSet {
  Eigen::MatrixXd vertices;      // K x d
  // Input row chosen for each vertex. For KNN-SP these index the original
  // (pre-denoising) points whose smoothed copies were selected.
  std::vector<int> source_indices;
  bool degenerate = false;       // cloud had no K independent directions
  int pruned = 0;                // KNN-SP: points removed before SP
  bool approximate_diameter = false;
};

// Successive projection on the rows of `points` (n x d, d >= K - 1).
// Greedy max-norm selection with orthogonal deflation; when d == K - 1 the
// last two vertices are the end points of the residual line. Norm ties go
// to the lowest row index. Throws DimensionError on fewer than K points or
// d < K - 1.
VertexSet successive_projection(const Eigen::MatrixXd& points, int k);

struct KnnSpParams {
  int neighbors = 1;    // N
  double alpha = 20.0;  // ball radius s_max / alpha
};

// KNN-denoised SP: each point is replaced by the mean of its (at most N)
// nearest neighbors inside the ball of radius s_max / alpha, itself
// included; points whose neighborhood has two or fewer members are pruned.
// SP then runs on the survivors. Throws ValidationError if too few points
// survive.
VertexSet knn_successive_projection(const Eigen::MatrixXd& points, int k,
                                    const KnnSpParams& params);

// Point clouds above this size use a sampled diameter estimate.
inline constexpr int kExactDiameterLimit = 20000;

}  // namespace blockgof

#endif  // BLOCKGOF_VERTEX_HUNTING_HPP_
