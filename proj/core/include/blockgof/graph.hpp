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

#ifndef BLOCKGOF_GRAPH_HPP_
#define BLOCKGOF_GRAPH_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

namespace blockgof {

using Edge = std::pair<int, int>;

// Counters collected while building a Network from raw pairs.
struct LoadStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
  std::size_t lines_read = 0;
};

// Undirected simple graph on nodes 0..n-1: symmetric, hollow, binary.
//
// Immutable after construction, so a single instance can be shared by
// concurrent readers.
class Network {
 public:
  // Builds from arbitrary pairs: orientation is ignored, duplicates are
  // collapsed and self-loops dropped (both counted in `stats` when given).
  // Throws ValidationError if n < 3 or an endpoint is out of range.
  static Network from_edges(int n, std::span<const Edge> edges,
                            LoadStats* stats = nullptr);

  int num_nodes() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  // Edges as (i, j) with i < j, lexicographically sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted neighbor list of node i.
  std::span<const int> neighbors(int i) const;
  int degree(int i) const { return offsets_[i + 1] - offsets_[i]; }
  Eigen::VectorXd degrees() const;
  bool has_edge(int i, int j) const;
  // A(i, j) in {0, 1}.
  int operator()(int i, int j) const { return has_edge(i, j) ? 1 : 0; }

  const Eigen::SparseMatrix<double, Eigen::RowMajor>& adjacency() const {
    return adjacency_;
  }

 private:
  Network() = default;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_;
  std::vector<int> neighbors_;
  Eigen::SparseMatrix<double, Eigen::RowMajor> adjacency_;
};

// Parses the edge-list text format:
//
//   # base=1        optional; node labels are 0-based unless base=1
//   # n=34          optional; otherwise n = largest label + 1
//   1 2
//   2 3
//
// Blank lines and other '#' comments are ignored. Throws ParseError with the
// offending line number, or ValidationError for an empty graph.
Network load_edge_list(std::istream& in, LoadStats* stats = nullptr);
Network load_edge_list(const std::filesystem::path& path,
                       LoadStats* stats = nullptr);

// Writes `net` in the format above (0-based, with an explicit n header).
void save_edge_list(const Network& net, std::ostream& out);
void save_edge_list(const Network& net, const std::filesystem::path& path);

struct DegreeStats {
  double d_min = 0.0;
  double d_max = 0.0;
  double d_bar = 0.0;
};

DegreeStats degree_stats(const Network& net);
void write_degree_stats_csv(const DegreeStats& stats, std::ostream& out);

// Largest connected component. `original_index` (if given) receives, for
// every node of the result, its label in `net`.
Network giant_component(const Network& net,
                        std::vector<int>* original_index = nullptr);

// KNN-SP tuning pair used for real-data vertex hunting.
struct KnnSpTuning {
  int neighbors = 1;   // N
  double alpha = 20.0; // ball radius is s_max / alpha
};

// alpha = 20 if floor(n/K) > 20, else 5;
// m0 = round([K (d_bar / d_min) / 250]^2); N = round((m0 + 1) * min(10, n/10)).
// Rounding is half away from zero. Throws ValidationError when d_min = 0.
KnnSpTuning knnsp_tuning(int n, const DegreeStats& degrees, int k);
KnnSpTuning knnsp_tuning(const Network& net, int k);

}  // namespace blockgof

#endif  // BLOCKGOF_GRAPH_HPP_
