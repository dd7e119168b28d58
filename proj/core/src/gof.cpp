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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include <Eigen/Eigenvalues>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/stats.hpp"
#include "blockgof/sym_matrix.hpp"

namespace blockgof {
namespace {

void check_square(const Eigen::MatrixXd& omega) {
  if (omega.rows() != omega.cols()) throw DimensionError("Omega must be square");
}

// Indices of eigenvalues sorted by decreasing magnitude.
std::vector<int> by_magnitude(const Eigen::VectorXd& values) {
  std::vector<int> idx(values.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return std::abs(values(a)) > std::abs(values(b));
  });
  return idx;
}

bool irreducible(const Eigen::MatrixXd& omega) {
  const Eigen::Index n = omega.rows();
  std::vector<char> seen(n, 0);
  std::queue<Eigen::Index> q;
  q.push(0);
  seen[0] = 1;
  Eigen::Index count = 1;
  while (!q.empty()) {
    const Eigen::Index i = q.front();
    q.pop();
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!seen[j] && omega(i, j) != 0.0) {
        seen[j] = 1;
        ++count;
        q.push(j);
      }
    }
  }
  return count == n;
}

}  // namespace

const ModelGof* GofReport::find(Model model) const {
  for (const ModelGof& m : models) {
    if (m.model == model) return &m;
  }
  return nullptr;
}

GofReport gof_all(const Network& net, int k, const GofConfig& config) {
  GofReport report;
  report.n = net.num_nodes();
  report.k = k;
  report.alpha = config.alpha;
  report.critical = two_sided_critical(config.alpha);
  report.c_n3 = count_c3(net);
  if (report.c_n3 == 0) {
    throw UndefinedStatisticError("network has no triangle; T_n is undefined");
  }
  const SymMatrix a = SymMatrix::from_network(net);
  for (Model model : config.models) {
    ModelGof entry;
    entry.model = model;
    try {
      const FitResult f = fit(model, a, k, config.fit);
      entry.flags = f.flags;
      entry.stats = cycle_stats(net, f.omega);
      entry.ok = true;
      entry.reject = std::abs(entry.stats.t_n) >= report.critical;
    } catch (const Error& e) {
      entry.error = e.what();
    }
    report.models.push_back(std::move(entry));
  }
  return report;
}

EstimateKResult estimate_k(const Network& net, int k_max, double alpha,
                           const FitOptions& options) {
  if (k_max < 1) throw ValidationError("k_max must be at least 1");
  const double z = two_sided_critical(alpha);
  const SymMatrix a = SymMatrix::from_network(net);
  if (count_c3(net) == 0) {
    throw UndefinedStatisticError("network has no triangle; T_n is undefined");
  }
  EstimateKResult out;
  out.k = k_max + 1;
  for (int k0 = 1; k0 <= k_max; ++k0) {
    double t = std::numeric_limits<double>::quiet_NaN();
    try {
      t = t_n(net, fit_dcbm(a, k0, options).omega);
    } catch (const Error&) {
      out.failed.push_back(k0);
    }
    out.t_values.push_back(t);
    if (std::isfinite(t) && std::abs(t) < z) {
      out.k = k0;
      break;
    }
  }
  return out;
}

double trace_cube(const Eigen::MatrixXd& m) {
  const Eigen::MatrixXd m2 = m * m;
  return m2.cwiseProduct(m).sum();
}

SnrResult snr(const Eigen::MatrixXd& omega, Model model, int k,
              const FitOptions& options) {
  if (omega.rows() > kSnrMaxNodes) {
    throw ValidationError("SNR uses dense traces; n exceeds " +
                          std::to_string(kSnrMaxNodes));
  }
  check_square(omega);
  SnrResult out;
  out.omega_tilde = fit(model, SymMatrix(omega), k, options).omega.to_dense();
  out.trace_diff3 = trace_cube(omega - out.omega_tilde);
  out.trace_omega3 = trace_cube(omega);
  out.snr = out.trace_diff3 / std::sqrt(6.0 * out.trace_omega3);
  return out;
}

double higher_rank_snr_bound(const Eigen::MatrixXd& omega, int k) {
  check_square(omega);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(omega, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const std::vector<int> order = by_magnitude(lambda);
  double tail = 0.0;
  double total = 0.0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const double c = std::pow(lambda(order[j]), 3);
    total += c;
    if (static_cast<int>(j) >= k) tail += c;
  }
  return tail / std::sqrt(6.0 * total);
}

NmfDiagnostics nmf_feasibility(const Eigen::MatrixXd& omega, int k) {
  check_square(omega);
  const Eigen::Index n = omega.rows();
  if (k < 1 || k > n) throw DimensionError("K out of range");
  if (!irreducible(omega)) throw ValidationError("Omega is reducible");

  const Eigen::VectorXd u = omega.rowwise().sum();
  const Eigen::VectorXd s = u.cwiseSqrt().cwiseInverse();
  const Eigen::MatrixXd normalized = s.asDiagonal() * omega * s.asDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (normalized + normalized.transpose()));
  const std::vector<int> order = by_magnitude(es.eigenvalues());

  NmfDiagnostics d;
  d.tau.resize(k);
  d.rho.resize(n, k);
  d.weights.resize(k);
  const double u_bar = u.mean();
  for (int j = 0; j < k; ++j) {
    d.tau(j) = es.eigenvalues()(order[j]);
    // L = U^{-1} Omega shares eigenvalues with U^{-1/2} Omega U^{-1/2};
    // its eigenvectors are U^{-1/2} eta.
    Eigen::VectorXd rho = s.asDiagonal() * es.eigenvectors().col(order[j]);
    rho.normalize();
    if (rho.sum() < 0.0) rho = -rho;
    d.rho.col(j) = rho;
    d.weights(j) = u_bar / rho.dot(u.asDiagonal() * rho);
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> om(omega, Eigen::EigenvaluesOnly);
  const std::vector<int> om_order = by_magnitude(om.eigenvalues());
  for (int j = 0; j < k; ++j) {
    if (om.eigenvalues()(om_order[j]) > 0.0) ++d.positive_eigenvalues;
  }

  const double root_n = std::sqrt(static_cast<double>(n));
  for (int j = 1; j < k; ++j) {
    const double inf = (root_n * d.rho.col(j)).cwiseAbs().maxCoeff();
    d.lhs += std::abs(d.tau(j)) * d.weights(j) * inf * inf;
  }
  if (k <= 2) {
    d.feasible = true;
  } else {
    d.bound = 1.0 / (k - 1);
    d.feasible = 2 * d.positive_eigenvalues > k && d.lhs <= d.bound;
  }
  return d;
}

}  // namespace blockgof
