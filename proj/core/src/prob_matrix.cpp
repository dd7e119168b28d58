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

#include "blockgof/prob_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "blockgof/errors.hpp"

namespace blockgof {

std::string_view model_name(Model model) {
  switch (model) {
    case Model::kSbm: return "SBM";
    case Model::kDcbm: return "DCBM";
    case Model::kMmsbm: return "MMSBM";
    case Model::kDcmm: return "DCMM";
  }
  return "?";
}

std::optional<Model> parse_model(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "sbm") return Model::kSbm;
  if (lower == "dcbm") return Model::kDcbm;
  if (lower == "mmsbm") return Model::kMmsbm;
  if (lower == "dcmm") return Model::kDcmm;
  return std::nullopt;
}

bool model_nested_in(Model inner, Model outer) {
  if (inner == outer || outer == Model::kDcmm) return true;
  return inner == Model::kSbm && (outer == Model::kDcbm || outer == Model::kMmsbm);
}

ProbMatrix ProbMatrix::factored(Eigen::VectorXd theta, Eigen::MatrixXd pi,
                                Eigen::MatrixXd p, bool clip_to_unit) {
  if (pi.rows() != theta.size() || pi.cols() != p.rows() ||
      p.rows() != p.cols()) {
    throw DimensionError("ProbMatrix::factored: inconsistent factor shapes");
  }
  ProbMatrix m;
  m.theta_ = std::move(theta);
  m.pi_ = std::move(pi);
  m.p_ = std::move(p);
  m.clip_ = clip_to_unit;
  if (clip_to_unit) {
    const Eigen::MatrixXd f = m.left_factor();
    const Eigen::MatrixXd fp = f * m.p_;
    const Eigen::Index n = f.rows();
    std::size_t count = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < j; ++i) {
        const double v = fp.row(i).dot(f.row(j));
        if (v < 0.0 || v > 1.0) count += 2;
      }
    }
    m.clipped_offdiagonal_ = count;
  }
  return m;
}

ProbMatrix ProbMatrix::dense(Eigen::MatrixXd omega) {
  if (omega.rows() != omega.cols()) {
    throw DimensionError("ProbMatrix::dense: matrix must be square");
  }
  ProbMatrix m;
  m.dense_ = std::move(omega);
  return m;
}

int ProbMatrix::size() const {
  return static_cast<int>(dense_ ? dense_->rows() : theta_.size());
}

double ProbMatrix::operator()(int i, int j) const {
  if (dense_) return (*dense_)(i, j);
  const double v =
      theta_(i) * theta_(j) * pi_.row(i).dot(p_ * pi_.row(j).transpose());
  return clip_ ? std::clamp(v, 0.0, 1.0) : v;
}

Eigen::MatrixXd ProbMatrix::left_factor() const {
  if (dense_) throw DimensionError("dense ProbMatrix has no factorization");
  return theta_.asDiagonal() * pi_;
}

Eigen::MatrixXd ProbMatrix::to_dense() const {
  if (dense_) return *dense_;
  const Eigen::MatrixXd f = left_factor();
  Eigen::MatrixXd omega = f * p_ * f.transpose();
  // Bitwise symmetric regardless of summation order.
  omega = (0.5 * (omega + omega.transpose())).eval();
  if (clip_) omega = omega.cwiseMax(0.0).cwiseMin(1.0);
  return omega;
}

}  // namespace blockgof
