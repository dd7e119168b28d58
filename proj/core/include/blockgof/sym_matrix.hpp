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

#ifndef BLOCKGOF_SYM_MATRIX_HPP_
#define BLOCKGOF_SYM_MATRIX_HPP_

#include <variant>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace blockgof {

class Network;

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// A symmetric n x n operand for the spectral and fitting code: either the
// sparse adjacency of an observed network or a dense matrix (used when a
// probability matrix itself is fed through a fitter).
class SymMatrix {
 public:
  explicit SymMatrix(SparseMatrix sparse);
  explicit SymMatrix(Eigen::MatrixXd dense);
  static SymMatrix from_network(const Network& net);

  int size() const;
  bool is_sparse() const { return std::holds_alternative<SparseMatrix>(data_); }

  // this * x
  Eigen::MatrixXd multiply(const Eigen::MatrixXd& x) const;
  Eigen::VectorXd multiply(const Eigen::VectorXd& x) const;
  Eigen::VectorXd row_sums() const;
  Eigen::MatrixXd to_dense() const;
  // x' * this * y
  Eigen::MatrixXd bilinear(const Eigen::MatrixXd& x,
                           const Eigen::MatrixXd& y) const;

 private:
  std::variant<SparseMatrix, Eigen::MatrixXd> data_;
};

}  // namespace blockgof

#endif  // BLOCKGOF_SYM_MATRIX_HPP_
