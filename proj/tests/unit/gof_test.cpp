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

#include "blockgof/gof.hpp"

#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/sim.hpp"
#include "blockgof/stats.hpp"
#include "support/oracles.hpp"

namespace blockgof {
namespace {

TEST(GofAllTest, KarateReportShape) {
  const GofReport r = gof_all(testing::karate_club(), 2);
  ASSERT_EQ(r.models.size(), 4u);
  EXPECT_EQ(r.c_n3, 6 * 45);
  EXPECT_NEAR(r.critical, 1.959963984540054, 1e-12);
  for (const ModelGof& m : r.models) {
    ASSERT_TRUE(m.ok) << m.error;
    EXPECT_EQ(m.reject, std::abs(m.stats.t_n) >= r.critical);
    EXPECT_LT(std::abs(m.stats.t_n), 5.0);
  }
  EXPECT_EQ(r.models[0].model, Model::kSbm);
  EXPECT_EQ(r.models[3].model, Model::kDcmm);
}

TEST(GofAllTest, Deterministic) {
  Rng rng(1);
  const GeneratedOmega g = gen_omega(experiment1(Model::kDcmm, 300), rng);
  const Network net = sample_network(g.omega, rng);
  const GofReport a = gof_all(net, 2);
  const GofReport b = gof_all(net, 2);
  for (std::size_t m = 0; m < 4; ++m) EXPECT_EQ(a.models[m].stats.t_n, b.models[m].stats.t_n);
}

TEST(GofAllTest, TriangleFreeIsUndefined) {
  std::vector<Edge> star;
  for (int i = 1; i < 6; ++i) star.emplace_back(0, i);
  EXPECT_THROW(gof_all(Network::from_edges(6, star), 1), UndefinedStatisticError);
}

TEST(GofAllTest, SingleTriangleIsDefined) {
  const std::vector<Edge> tri = {{0, 1}, {1, 2}, {0, 2}};
  GofConfig c;
  c.fit = FitOptions{};
  const GofReport r = gof_all(Network::from_edges(3, tri), 1, c);
  EXPECT_EQ(r.c_n3, 6);
  for (const ModelGof& m : r.models) EXPECT_TRUE(m.stats.defined) << m.error;
}

TEST(GofAllTest, FitterFailureRecordedPerModel) {
  // An isolated node breaks DCMM only.
  Rng rng(2);
  std::vector<Edge> e;
  for (int i = 0; i < 30; ++i)
    for (int j = i + 1; j < 30; ++j)
      if (rng.uniform() < 0.3) e.emplace_back(i, j);
  const Network net = Network::from_edges(31, e);
  const GofReport r = gof_all(net, 1);
  EXPECT_TRUE(r.find(Model::kSbm)->ok);
  EXPECT_FALSE(r.find(Model::kDcmm)->ok);
  EXPECT_FALSE(r.find(Model::kDcmm)->error.empty());
}

TEST(EstimateKTest, CompleteGraphIsOne) {
  std::vector<Edge> e;
  for (int i = 0; i < 20; ++i)
    for (int j = i + 1; j < 20; ++j) e.emplace_back(i, j);
  EXPECT_EQ(estimate_k(Network::from_edges(20, e), 4).k, 1);
}

TEST(EstimateKTest, ErdosRenyiIsUsuallyOne) {
  int ones = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng(100 + s);
    ones += estimate_k(testing::erdos_renyi(300, 0.05, rng), 4).k == 1;
  }
  EXPECT_GE(ones, 8);
}

TEST(EstimateKTest, StopsAtFirstAcceptance) {
  Rng rng(3);
  const EstimateKResult r = estimate_k(testing::erdos_renyi(200, 0.1, rng), 5);
  ASSERT_FALSE(r.t_values.empty());
  EXPECT_EQ(static_cast<int>(r.t_values.size()), std::min(r.k, 5));
  const double z = two_sided_critical(0.05);
  for (std::size_t i = 0; i + 1 < r.t_values.size(); ++i) EXPECT_GE(std::abs(r.t_values[i]), z);
}

TEST(SnrTest, SbmVersusDegreeHeterogeneityClosedForm) {
  Rng rng(4);
  const int n = 100;
  Eigen::VectorXd theta(n);
  for (int i = 0; i < n; ++i) theta(i) = rng.uniform(0.1, 0.9);
  const Eigen::MatrixXd omega = theta * theta.transpose();
  const SnrResult r = snr(omega, Model::kSbm, 1);
  const double s2 = theta.squaredNorm();
  const double nbar2 = n * std::pow(theta.mean(), 2);
  const double expected = std::pow(s2 - nbar2, 2) * (s2 + 2.0 * nbar2);
  EXPECT_NEAR(r.trace_diff3, expected, 1e-9 * expected);
  EXPECT_NEAR(r.trace_omega3, std::pow(s2, 3), 1e-12 * std::pow(s2, 3));
}

TEST(SnrTest, InClassOmegaHasZeroSnr) {
  Rng rng(5);
  const testing::DcmmInstance d = testing::random_dcmm(80, 2, rng);
  const SnrResult r = snr(d.omega, Model::kDcmm, 2);
  EXPECT_LT(std::abs(r.snr), 1e-8);
}

TEST(SnrTest, HigherRankLowerBoundHolds) {
  Rng rng(6);
  SimConfig c = experiment3_wrong_k(300);
  const GeneratedOmega g = gen_omega(c, rng);
  const SnrResult r = snr(g.omega, Model::kDcmm, 2);
  EXPECT_TRUE(std::isfinite(r.snr));
  EXPECT_GE(r.snr, higher_rank_snr_bound(g.omega, 2) - 1e-12);
}

TEST(SnrTest, GuardsLargeMatrices) {
  EXPECT_THROW(snr(Eigen::MatrixXd::Zero(kSnrMaxNodes + 1, 1), Model::kSbm, 1), ValidationError);
}

TEST(NmfTest, LeadingPairIsOneAndFlat) {
  Rng rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const testing::DcmmInstance d = testing::random_dcmm(50, 3, rng);
    const NmfDiagnostics diag = nmf_feasibility(d.omega, 3);
    EXPECT_NEAR(diag.tau(0), 1.0, 1e-9);
    const Eigen::VectorXd flat = Eigen::VectorXd::Constant(50, 1.0 / std::sqrt(50.0));
    EXPECT_LT((diag.rho.col(0) - flat).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_LE(diag.tau.cwiseAbs().sum(), 3.0 + 1e-9);
  }
}

TEST(NmfTest, TwoCommunitiesAlwaysFeasible) {
  Rng rng(8);
  const testing::DcmmInstance d = testing::random_dcmm(40, 2, rng);
  EXPECT_TRUE(nmf_feasibility(d.omega, 2).feasible);
}

TEST(NmfTest, WeakSignalBalancedDesignFeasible) {
  // Balanced three-block design, P close to the all-ones matrix.
  const int n = 90;
  Eigen::MatrixXd pi = Eigen::MatrixXd::Zero(n, 3);
  for (int i = 0; i < n; ++i) pi(i, i % 3) = 1.0;
  Eigen::MatrixXd p = Eigen::MatrixXd::Constant(3, 3, 0.9);
  p.diagonal().setOnes();
  const Eigen::MatrixXd omega = 0.1 * pi * p * pi.transpose();
  const NmfDiagnostics d = nmf_feasibility(omega, 3);
  EXPECT_LT(d.lhs, 0.5);
  EXPECT_TRUE(d.feasible);
}

TEST(NmfTest, ReducibleRejected) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(6, 6);
  omega.topLeftCorner(3, 3).setConstant(0.2);
  omega.bottomRightCorner(3, 3).setConstant(0.3);
  EXPECT_THROW(nmf_feasibility(omega, 2), ValidationError);
}

}  // namespace
}  // namespace blockgof
