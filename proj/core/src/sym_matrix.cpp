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

#include "blockgof/sym_matrix.hpp"

#include <string>

#include "blockgof/errors.hpp"
#include "blockgof/graph.hpp"

namespace blockgof {

SymMatrix::SymMatrix(SparseMatrix sparse) : data_(std::move(sparse)) {
  const auto& m = std::get<SparseMatrix>(data_);
  if (m.rows() != m.cols()) throw DimensionError("SymMatrix must be square");
}

SymMatrix::SymMatrix(Eigen::MatrixXd dense) : data_(std::move(dense)) {
  const auto& m = std::get<Eigen::MatrixXd>(data_);
  if (m.rows() != m.cols()) throw DimensionError("SymMatrix must be square");
}

SymMatrix SymMatrix::from_network(const Network& net) {
  return SymMatrix(net.adjacency());
}

int SymMatrix::size() const {
  return std::visit([](const auto& m) { return static_cast<int>(m.rows()); },
                    data_);
}

Eigen::MatrixXd SymMatrix::multiply(const Eigen::MatrixXd& x) const {
  if (x.rows() != size()) {
    throw DimensionError("SymMatrix::multiply: expected " +
                         std::to_string(size()) + " rows");
  }
  return std::visit([&](const auto& m) -> Eigen::MatrixXd { return m * x; },
                    data_);
}

Eigen::VectorXd SymMatrix::multiply(const Eigen::VectorXd& x) const {
  if (x.size() != size()) {
    throw DimensionError("SymMatrix::multiply: vector length mismatch");
  }
  return std::visit([&](const auto& m) -> Eigen::VectorXd { return m * x; },
                    data_);
}

Eigen::VectorXd SymMatrix::row_sums() const {
  return std::visit(
      [](const auto& m) -> Eigen::VectorXd {
        return m * Eigen::VectorXd::Ones(m.cols());
      },
      data_);
}

Eigen::MatrixXd SymMatrix::to_dense() const {
  return std::visit(
      [](const auto& m) -> Eigen::MatrixXd { return Eigen::MatrixXd(m); },
      data_);
}

Eigen::MatrixXd SymMatrix::bilinear(const Eigen::MatrixXd& x,
                                    const Eigen::MatrixXd& y) const {
  return x.transpose() * multiply(y);
}

}  // namespace blockgof
