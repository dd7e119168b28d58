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

#include "blockgof/sim.hpp"

#include <cmath>
#include <string>

#include <gtest/gtest.h>

#include "blockgof/errors.hpp"

namespace blockgof {
namespace {

TEST(GenOmegaTest, ConstantSbm) {
  SimConfig c;
  c.n = 4;
  c.k = 1;
  c.model = Model::kSbm;
  c.theta = {ThetaLaw::kConstant, 0.0, 0.0, 0.3};
  c.pi.mixed = MixedLaw::kNone;
  Rng rng(1);
  const GeneratedOmega g = gen_omega(c, rng);
  EXPECT_LT((g.omega - Eigen::MatrixXd::Constant(4, 4, 0.3)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(GenOmegaTest, ExperimentOneStaysBelowBound) {
  Rng rng(2);
  const GeneratedOmega g = gen_omega(experiment1(Model::kDcmm, 3000), rng);
  EXPECT_LE(g.omega.maxCoeff(), 0.09 + 1e-15);
  EXPECT_GE(g.omega.minCoeff(), 0.0);
  // n/8 pure nodes per community.
  int pure = 0;
  for (int i = 0; i < 3000; ++i) pure += g.params.pi.row(i).maxCoeff() == 1.0;
  EXPECT_EQ(pure, 750);
}

TEST(GenOmegaTest, DcbmMatchesHandFormula) {
  Rng rng(3);
  const GeneratedOmega g = gen_omega(experiment1(Model::kDcbm, 40), rng);
  const ModelParams& m = g.params;
  for (int i : {0, 5, 25, 39})
    for (int j : {1, 22, 38}) {
      const int a = i < 20 ? 0 : 1;
      const int b = j < 20 ? 0 : 1;
      EXPECT_NEAR(g.omega(i, j), m.theta(i) * m.theta(j) * (a == b ? 1.0 : 0.05), 1e-15);
    }
}

TEST(GenOmegaTest, TwoPointRows) {
  Rng rng(4);
  const GeneratedOmega g = gen_omega(experiment2(80, 0.2, 0.25), rng);
  EXPECT_DOUBLE_EQ(g.params.pi(20, 0), 0.25);
  EXPECT_DOUBLE_EQ(g.params.pi(79, 0), 0.75);
}

TEST(GenOmegaTest, IllegalEntryNamed) {
  SimConfig c = experiment1(Model::kSbm, 10);
  c.theta.alpha_n = 1.5;
  Rng rng(5);
  try {
    gen_omega(c, rng);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "omega");
    EXPECT_NE(std::string(e.what()).find("(0, 0)"), std::string::npos);
  }
}

TEST(SampleNetworkTest, ZeroAndOne) {
  Rng rng(6);
  EXPECT_EQ(sample_network(Eigen::MatrixXd::Zero(10, 10), rng).num_edges(), 0u);
  EXPECT_EQ(sample_network(Eigen::MatrixXd::Ones(10, 10), rng).num_edges(), 45u);
}

TEST(SampleNetworkTest, EdgeCountConcentrates) {
  Rng rng(7);
  const int n = 2000;
  const double pairs = n * (n - 1) / 2.0;
  const auto m = static_cast<double>(
      sample_network(Eigen::MatrixXd::Constant(n, n, 0.3), rng).num_edges());
  EXPECT_LT(std::abs(m - 0.3 * pairs), 4.0 * std::sqrt(pairs * 0.3 * 0.7));
}

TEST(ValidateTest, NamesOffendingField) {
  SimConfig c = experiment1(Model::kDcmm, 100);
  c.replicates = 0;
  try {
    validate(c);
    FAIL();
  } catch (const ConfigError& e) {
    EXPECT_EQ(e.field(), "replicates");
  }
  c = experiment1(Model::kSbm, 100);
  c.pi.mixed = MixedLaw::kDirichlet;
  EXPECT_THROW(validate(c), ConfigError);
  c = experiment1(Model::kDcmm, 100);
  c.pi.concentration = 0.0;
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(ParseConfigTest, FullSchema) {
  const SimConfig c = parse_sim_config(R"({
    "schema_version": 1, "n": 500, "k": 2, "model": "dcmm",
    "theta": {"law": "inverse_uniform", "a": 2, "b": 10},
    "p_offdiag": 0.2,
    "pi": {"mixed": "two_point", "pure_per_community": 0.125, "x": 0.3},
    "replicates": 12, "seed": 99, "assumed": ["DCMM", "sbm"],
    "alpha": 0.1, "vh": "knnsp", "regularize": true, "threads": 2
  })");
  EXPECT_EQ(c.n, 500);
  EXPECT_EQ(c.theta.law, ThetaLaw::kInverseUniform);
  EXPECT_EQ(c.pi.mixed, MixedLaw::kTwoPoint);
  EXPECT_DOUBLE_EQ(c.pi.x, 0.3);
  EXPECT_EQ(c.seed, 99u);
  EXPECT_EQ(c.assumed, (std::vector<Model>{Model::kDcmm, Model::kSbm}));
  EXPECT_EQ(c.vh, VhMode::kKnnSp);
  EXPECT_TRUE(c.regularize);
}

TEST(ParseConfigTest, Errors) {
  auto field_of = [](const std::string& text) {
    try {
      parse_sim_config(text);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return std::string("<none>");
  };
  EXPECT_EQ(field_of(R"({"n": 10})"), "schema_version");
  EXPECT_EQ(field_of(R"({"schema_version": 2})"), "schema_version");
  EXPECT_EQ(field_of(R"({"schema_version": 1, "n": "ten"})"), "n");
  EXPECT_EQ(field_of(R"({"schema_version": 1, "replicates": 0})"), "replicates");
  EXPECT_EQ(field_of(R"({"schema_version": 1, "theta": {"law": "cauchy"}})"), "theta.law");
  EXPECT_EQ(field_of(R"({"schema_version": 1, "p_matrix": [[1, 0.1], [0.2, 1]]})"), "p_matrix");
  EXPECT_EQ(field_of("not json"), "");
}

TEST(ExperimentTest, DeterministicAcrossThreadCounts) {
  SimConfig c = experiment1(Model::kDcbm, 200);
  c.replicates = 6;
  c.assumed = {Model::kDcbm, Model::kSbm};
  const ExperimentResult a = run_experiment(c);
  c.threads = 3;
  const ExperimentResult b = run_experiment(c);
  for (std::size_t m = 0; m < 2; ++m) {
    for (int r = 0; r < 6; ++r) EXPECT_EQ(a.series[m].t[r], b.series[m].t[r]);
  }
  EXPECT_EQ(a.replicates, 6);
  EXPECT_GE(a.series[0].rejection_rate, 0.0);
  EXPECT_LE(a.series[0].rejection_rate, 1.0);
}

TEST(ExperimentTest, NullCalibrationRequiresNesting) {
  EXPECT_THROW(run_null_calibration(experiment1(Model::kDcmm, 100), Model::kSbm, 0.05),
               ConfigError);
}

TEST(HistogramTest, BinsAndOverflow) {
  Histogram h;
  h.add(-7.0);
  h.add(-6.0);
  h.add(0.0);
  h.add(5.99);
  h.add(6.0);
  EXPECT_EQ(h.underflow, 1);
  EXPECT_EQ(h.overflow, 1);
  EXPECT_EQ(h.counts[0], 1);
  EXPECT_EQ(h.counts[20], 1);
  EXPECT_EQ(h.counts[39], 1);
}

}  // namespace
}  // namespace blockgof
