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

// Reference implementations for tests. Deliberately naive: literal sums,
// dense linear algebra, exhaustive permutation search.

#ifndef BLOCKGOF_TESTS_SUPPORT_ORACLES_HPP_
#define BLOCKGOF_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "blockgof/graph.hpp"
#include "blockgof/membership.hpp"
#include "blockgof/rng.hpp"

namespace blockgof::testing {

Eigen::MatrixXd dense_adjacency(const Network& net);

// Literal sum over ordered distinct (i, j, k) of M(i,j) M(j,k) M(k,i).
double brute_signed_triangles(const Eigen::MatrixXd& m);
// Literal count of ordered distinct triples forming a triangle.
std::int64_t brute_c3(const Eigen::MatrixXd& a);

Network erdos_renyi(int n, double p, Rng& rng);
Eigen::MatrixXd random_symmetric(int n, double lo, double hi, Rng& rng);

struct DcmmInstance {
  Eigen::VectorXd theta;
  Eigen::MatrixXd pi;
  Eigen::MatrixXd p;
  Eigen::MatrixXd omega;
  std::vector<int> pure;  // one pure node per community
};

// Identifiable DCMM: unit-diagonal positive-definite P, pure nodes in every
// community, Dirichlet(1) mixed rows.
DcmmInstance random_dcmm(int n, int k, Rng& rng, double pure_fraction = 0.2);

// A H (H'AH)^{-1} H' A with A taken literally (dense).
Eigen::MatrixXd closed_form_dcmm(const Eigen::MatrixXd& a, const HardLabeling& h);

struct HandOracle {
  Eigen::VectorXd theta;
  Eigen::MatrixXd pi;
  Eigen::MatrixXd p;
};
// Independent parameter recovery from the entries of Omega at known pure
// nodes: theta at a pure node is sqrt(Omega_ii), P from the pure-pure block,
// then theta_j pi_j = P^{-1} y_j for every other node.
HandOracle hand_oracle(const Eigen::MatrixXd& omega, const std::vector<int>& pure);

// Permutation perm minimizing ||truth.col(c) - est.col(perm[c])||, by
// exhaustive search (K is small).
std::vector<int> best_permutation(const Eigen::MatrixXd& truth, const Eigen::MatrixXd& est);
Eigen::MatrixXd permute_columns(const Eigen::MatrixXd& m, const std::vector<int>& perm);
Eigen::MatrixXd permute_both(const Eigen::MatrixXd& m, const std::vector<int>& perm);

// Fraction of nodes whose labels agree after the best relabeling.
double label_accuracy(const std::vector<int>& truth, const std::vector<int>& est, int k);

Network karate_club();
std::string test_data_path(const std::string& name);

}  // namespace blockgof::testing

#endif  // BLOCKGOF_TESTS_SUPPORT_ORACLES_HPP_
