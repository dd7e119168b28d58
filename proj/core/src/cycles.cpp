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

#include "blockgof/cycles.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"

namespace blockgof {

std::int64_t count_c3(const Network& net) {
  std::int64_t triangles = 0;
  for (auto [u, v] : net.edges()) {
    // Count w > v adjacent to both; every triangle u < v < w is seen once.
    auto nu = net.neighbors(u);
    auto nv = net.neighbors(v);
    auto a = nu.begin();
    auto b = nv.begin();
    while (a != nu.end() && b != nv.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        if (*a > v) ++triangles;
        ++a;
        ++b;
      }
    }
  }
  return 6 * triangles;
}

double signed_triangle_sum(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd m2 = m * m;
  const double tr_m3 = m.cwiseProduct(m2).sum();
  const Eigen::VectorXd diag = m.diagonal();
  const double tr_m_m2 = diag.dot(m2.diagonal());
  const double tr_m_m_m = diag.array().cube().sum();
  return tr_m3 - 3.0 * tr_m_m2 + 2.0 * tr_m_m_m;
}

namespace {

// Trace identity with M = A - F B F', never forming an n x n matrix.
double u_n3_low_rank(const Network& net, const Eigen::MatrixXd& f,
                     const Eigen::MatrixXd& b) {
  const auto& a = net.adjacency();
  const Eigen::MatrixXd af = a * f;                  // n x K
  const Eigen::MatrixXd g = f.transpose() * f;       // K x K
  const Eigen::MatrixXd h = f.transpose() * af;      // F'AF
  const Eigen::MatrixXd bg = b * g;

  const double tr_a3 = static_cast<double>(count_c3(net));
  const double tr_a2o = (af.transpose() * af * b).trace();
  const double tr_ao2 = (h * b * g * b).trace();
  const double tr_o3 = (bg * bg * bg).trace();
  const double tr_m3 = tr_a3 - 3.0 * tr_a2o + 3.0 * tr_ao2 - tr_o3;

  // Diagonal terms: M(i,i) = -Omega(i,i) and
  // (M^2)(i,i) = deg_i - 2 sum_j A_ij Omega_ij + sum_j Omega_ij^2.
  const Eigen::MatrixXd fb = f * b;      // row i: f_i' B
  const Eigen::MatrixXd fbgb = fb * g * b;
  double tr_m_m2 = 0.0;
  double tr_m_m_m = 0.0;
  for (int i = 0; i < net.num_nodes(); ++i) {
    const double omega_ii = fb.row(i).dot(f.row(i));
    const double a_omega = fb.row(i).dot(af.row(i));
    const double omega_sq = fbgb.row(i).dot(f.row(i));
    const double m2_ii = net.degree(i) - 2.0 * a_omega + omega_sq;
    tr_m_m2 += -omega_ii * m2_ii;
    tr_m_m_m += -omega_ii * omega_ii * omega_ii;
  }
  return tr_m3 - 3.0 * tr_m_m2 + 2.0 * tr_m_m_m;
}

}  // namespace

double u_n3(const Network& net, const ProbMatrix& omega_hat) {
  if (omega_hat.size() != net.num_nodes()) {
    throw DimensionError("u_n3: network has " + std::to_string(net.num_nodes()) +
                         " nodes but the probability matrix has order " +
                         std::to_string(omega_hat.size()));
  }
  if (omega_hat.is_exact_low_rank()) {
    return u_n3_low_rank(net, omega_hat.left_factor(), omega_hat.p());
  }
  Eigen::MatrixXd m = Eigen::MatrixXd(net.adjacency()) - omega_hat.to_dense();
  return signed_triangle_sum(m);
}

double t_n(const Network& net, const ProbMatrix& omega_hat) {
  const CycleStats s = cycle_stats(net, omega_hat);
  if (!s.defined) {
    throw UndefinedStatisticError(
        "T_n is undefined: the network contains no triangle");
  }
  return s.t_n;
}

CycleStats cycle_stats(const Network& net, const ProbMatrix& omega_hat) {
  CycleStats s;
  s.c_n3 = count_c3(net);
  s.u_n3 = u_n3(net, omega_hat);
  s.defined = s.c_n3 > 0;
  s.t_n = s.defined ? s.u_n3 / std::sqrt(6.0 * static_cast<double>(s.c_n3))
                    : std::numeric_limits<double>::quiet_NaN();
  return s;
}

}  // namespace blockgof
