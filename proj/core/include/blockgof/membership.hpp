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

#ifndef BLOCKGOF_MEMBERSHIP_HPP_
#define BLOCKGOF_MEMBERSHIP_HPP_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "blockgof/spectral.hpp"
#include "blockgof/sym_matrix.hpp"
#include "blockgof/vertex_hunting.hpp"

namespace blockgof {

// Rows are nonnegative weight vectors summing to one.
struct MembershipMatrix {
  Eigen::MatrixXd pi;           // n x K
  bool simplex_fallback = false;  // vertex matrix was singular
  int negative_b1 = 0;          // MSCORE: |.| guard used for b1(k)
  int empty_rows = 0;           // rows truncated to zero; set to uniform

  int num_nodes() const { return static_cast<int>(pi.rows()); }
  int num_communities() const { return static_cast<int>(pi.cols()); }
};

// Hard community assignment; labels are 0-based (community k <-> e_{k+1}).
struct HardLabeling {
  std::vector<int> labels;
  int k = 1;
  bool small_cluster = false;  // some community received no node

  Eigen::MatrixXd to_matrix() const;  // n x K indicator matrix
  std::vector<int> sizes() const;
};

HardLabeling make_labeling(std::vector<int> labels, int k);

enum class VhMode { kSp, kKnnSp };

struct VertexHuntingChoice {
  VhMode mode = VhMode::kSp;
  KnnSpParams knn;  // used when mode == kKnnSp
};

VertexSet hunt_vertices(const Eigen::MatrixXd& points, int k,
                        const VertexHuntingChoice& vh);

struct MscoreOptions {
  VertexHuntingChoice vh;
  double threshold = 0.0;  // SCORE clamp; <= 0 means log(n)
  EigOptions eig;
};

// Mixed-SCORE membership estimate. K = 1 returns the all-ones column.
MembershipMatrix mscore(const SymMatrix& a, int k, const MscoreOptions& options = {});

// Barycentric coordinates of every row of `points` (n x (K-1)) with respect
// to the simplex with vertex rows `vertices` (K x (K-1)). Returns false if
// the simplex is degenerate.
bool barycentric(const Eigen::MatrixXd& points, const Eigen::MatrixXd& vertices,
                 Eigen::MatrixXd& weights);

// Snap each row to e_k for its largest entry; ties go to the smallest k.
HardLabeling net_round(const Eigen::MatrixXd& pi);
inline HardLabeling net_round(const MembershipMatrix& m) { return net_round(m.pi); }

struct ClusterOptions {
  double threshold = 0.0;  // SCORE clamp; <= 0 means log(n)
  std::uint64_t seed = 1;
  int restarts = 10;
  int max_iterations = 100;
  EigOptions eig;
};

// SCORE: k-means on clamped eigenvector ratios. K = 1 puts every node in one
// community.
HardLabeling score_cluster(const SymMatrix& a, int k, const ClusterOptions& options = {});

// k-means on the rows of the leading K eigenvectors.
HardLabeling spectral_kmeans(const SymMatrix& a, int k, const ClusterOptions& options = {});

struct MmsbmInitOptions {
  VertexHuntingChoice vh;
  EigOptions eig;
};

// Vertex hunting on the rows of Xi (n x K); pi_i = (V*)^{-1} Xi' e_i with
// negatives set to zero and rows renormalized. A singular V* is replaced by
// the identity (flagged).
MembershipMatrix mmsbm_initial_pi(const SymMatrix& a, int k,
                                  const MmsbmInitOptions& options = {});

// Clamps negatives to zero and rescales rows to unit l1 norm. Rows that end
// up all zero become uniform; returns how many did.
int truncate_and_normalize(Eigen::MatrixXd& rows);

}  // namespace blockgof

#endif  // BLOCKGOF_MEMBERSHIP_HPP_
