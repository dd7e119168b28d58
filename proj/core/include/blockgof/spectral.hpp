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

#ifndef BLOCKGOF_SPECTRAL_HPP_
#define BLOCKGOF_SPECTRAL_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "blockgof/sym_matrix.hpp"

namespace blockgof {

class Network;

// Leading eigenpairs of a symmetric matrix, ordered by decreasing |lambda|.
// Each eigenvector has unit norm and its first nonzero entry is positive.
struct Embedding {
  Eigen::VectorXd values;   // K
  Eigen::MatrixXd vectors;  // n x K, column k pairs with values(k)

  int size() const { return static_cast<int>(values.size()); }
};

struct EigOptions {
  // Residual bound: ||A x - lambda x|| <= tol * |lambda_1|.
  double tol = 1e-9;
  // Matrices up to this order use a dense symmetric solver; larger ones use
  // Lanczos with full reorthogonalization.
  int dense_cutoff = 100;
  std::uint64_t seed = 0x6a09e667f3bcc909ULL;
};

// Top-k eigenpairs by magnitude. Throws SolverError (carrying the residuals)
// when the iteration cannot meet the residual bound.
Embedding top_k_eigs(const SymMatrix& a, int k, const EigOptions& options = {});
Embedding top_k_eigs(const Network& net, int k, const EigOptions& options = {});

// Dense reference path, usable for any n.
Embedding top_k_eigs_dense(const Eigen::MatrixXd& a, int k);

struct ScoreRatio {
  Eigen::MatrixXd ratios;    // n x (K-1)
  int zero_leading = 0;      // rows where the leading eigenvector vanished
};

// SCORE normalization: ratios(i, k) = clamp(xi_{k+1}(i) / xi_1(i), -t, t).
// Rows with xi_1(i) == 0 are set to +t and counted.
ScoreRatio score_ratio(const Embedding& emb, double threshold);

// log(n), the default SCORE threshold.
double default_score_threshold(int n);

}  // namespace blockgof

#endif  // BLOCKGOF_SPECTRAL_HPP_
