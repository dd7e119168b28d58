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

#include "blockgof/graph.hpp"

#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "blockgof/errors.hpp"
#include "support/oracles.hpp"

namespace blockgof {
namespace {

TEST(NetworkTest, CollapsesDuplicatesAndDropsLoops) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}, {2, 2}, {1, 2}, {0, 1}};
  LoadStats stats;
  const Network net = Network::from_edges(4, edges, &stats);
  EXPECT_EQ(net.num_nodes(), 4);
  EXPECT_EQ(net.num_edges(), 2u);
  EXPECT_EQ(stats.self_loops_dropped, 1u);
  EXPECT_EQ(stats.duplicates_collapsed, 2u);
  EXPECT_TRUE(net.has_edge(1, 0));
  EXPECT_FALSE(net.has_edge(0, 2));
  EXPECT_EQ(net.degree(3), 0);
}

TEST(NetworkTest, AdjacencyIsSymmetricAndHollow) {
  Rng rng(2);
  const Network net = testing::erdos_renyi(30, 0.2, rng);
  const Eigen::MatrixXd a = Eigen::MatrixXd(net.adjacency());
  EXPECT_EQ(a, a.transpose());
  EXPECT_EQ(a.diagonal().sum(), 0.0);
  EXPECT_EQ(a.sum(), 2.0 * net.num_edges());
  EXPECT_EQ(net.degrees(), a.rowwise().sum());
}

TEST(NetworkTest, RejectsTinyOrOutOfRange) {
  const std::vector<Edge> e = {{0, 1}};
  EXPECT_THROW(Network::from_edges(2, e), ValidationError);
  const std::vector<Edge> bad = {{0, 5}};
  EXPECT_THROW(Network::from_edges(4, bad), ValidationError);
}

TEST(EdgeListTest, ParsesOneBasedWithComments) {
  std::istringstream in("# a comment\n# base=1\n1 2\n\n2 3\n3 1\n");
  const Network net = load_edge_list(in);
  EXPECT_EQ(net.num_nodes(), 3);
  EXPECT_EQ(net.num_edges(), 3u);
  EXPECT_TRUE(net.has_edge(0, 2));
}

TEST(EdgeListTest, DeclaredSizeAddsIsolatedNodes) {
  std::istringstream in("# n=6\n0 1\n1 2\n");
  EXPECT_EQ(load_edge_list(in).num_nodes(), 6);
}

TEST(EdgeListTest, ReportsLineOfMalformedInput) {
  std::istringstream in("0 1\n1 x\n");
  try {
    load_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(EdgeListTest, EmptyIsRejected) {
  std::istringstream in("# nothing\n");
  EXPECT_THROW(load_edge_list(in), ValidationError);
}

TEST(EdgeListTest, RoundTrip) {
  Rng rng(4);
  const Network net = testing::erdos_renyi(25, 0.3, rng);
  std::stringstream buf;
  save_edge_list(net, buf);
  const Network back = load_edge_list(buf);
  EXPECT_EQ(back.num_nodes(), net.num_nodes());
  EXPECT_EQ(back.edges(), net.edges());
}

TEST(DegreeTest, KarateStatistics) {
  const DegreeStats s = degree_stats(testing::karate_club());
  EXPECT_EQ(s.d_min, 1.0);
  EXPECT_EQ(s.d_max, 17.0);
  EXPECT_NEAR(s.d_bar, 156.0 / 34.0, 1e-12);
}

TEST(DegreeTest, GiantComponentKeepsLargestPiece) {
  const std::vector<Edge> e = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {5, 6}, {6, 7}, {7, 8}};
  const Network net = Network::from_edges(10, e);
  std::vector<int> index;
  const Network g = giant_component(net, &index);
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(index, (std::vector<int>{5, 6, 7, 8}));
}

TEST(KnnTuningTest, KarateValues) {
  // floor(34/2) = 17 <= 20 gives alpha 5; m0 = round((2 * 4.588 / 250)^2) = 0;
  // N = round(1 * min(10, 3.4)) = 3.
  const KnnSpTuning t = knnsp_tuning(testing::karate_club(), 2);
  EXPECT_EQ(t.neighbors, 3);
  EXPECT_EQ(t.alpha, 5.0);
}

TEST(KnnTuningTest, LargeHeterogeneousNetwork) {
  DegreeStats s{1.0, 500.0, 100.0};
  // m0 = round((3 * 100 / 250)^2) = round(1.44) = 1; N = 2 * 10.
  const KnnSpTuning t = knnsp_tuning(3000, s, 3);
  EXPECT_EQ(t.neighbors, 20);
  EXPECT_EQ(t.alpha, 20.0);
}

TEST(KnnTuningTest, NeighborCountAtLeastOne) {
  DegreeStats s{1.0, 2.0, 1.5};
  EXPECT_GE(knnsp_tuning(4, s, 2).neighbors, 1);
}

TEST(KnnTuningTest, IsolatedNodeRejected) {
  DegreeStats s{0.0, 3.0, 1.0};
  EXPECT_THROW(knnsp_tuning(100, s, 2), ValidationError);
}

}  // namespace
}  // namespace blockgof
