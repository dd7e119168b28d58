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

#ifndef BLOCKGOF_CYCLES_HPP_
#define BLOCKGOF_CYCLES_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "blockgof/prob_matrix.hpp"

namespace blockgof {

class Network;

// Order-3 cycle statistics of a network against a fitted probability matrix.
struct CycleStats {
  std::int64_t c_n3 = 0;  // ordered distinct triples forming a triangle
  double u_n3 = 0.0;      // signed-triangle sum of A - Omega_hat
  double t_n = 0.0;       // U / sqrt(6 C); NaN when undefined
  bool defined = false;   // false iff c_n3 == 0
};

// C_{n,3} = 6 * (number of triangles), by sorted-neighbor intersection.
std::int64_t count_c3(const Network& net);

// Sum over ordered distinct triples of M(i,j) M(j,k) M(k,i), M = A - omega_hat,
// evaluated as tr(M^3) - 3 tr(M o M^2) + 2 tr(M o M o M). Uses the rank-K
// factorization when omega_hat has one; otherwise a dense O(n^3) path.
// Throws DimensionError on size mismatch.
double u_n3(const Network& net, const ProbMatrix& omega_hat);

// Dense evaluation of the same trace identity for an arbitrary symmetric M.
double signed_triangle_sum(const Eigen::MatrixXd& m);

// T_n = U_{n,3} / sqrt(6 C_{n,3}). Throws UndefinedStatisticError when the
// network has no triangle.
double t_n(const Network& net, const ProbMatrix& omega_hat);

// All three quantities; never throws for a triangle-free network (the
// statistic is flagged undefined instead).
CycleStats cycle_stats(const Network& net, const ProbMatrix& omega_hat);

}  // namespace blockgof

#endif  // BLOCKGOF_CYCLES_HPP_
