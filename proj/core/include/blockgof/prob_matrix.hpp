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

#ifndef BLOCKGOF_PROB_MATRIX_HPP_
#define BLOCKGOF_PROB_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace blockgof {

enum class Model { kSbm, kDcbm, kMmsbm, kDcmm };

std::string_view model_name(Model model);  // "SBM", "DCBM", ...
// Case-insensitive parse of "sbm", "dcbm", "mmsbm", "dcmm".
std::optional<Model> parse_model(std::string_view text);
// True if every `inner` network is also an `outer` network:
// SBM within DCBM and MMSBM, and all four within DCMM.
bool model_nested_in(Model inner, Model outer);

// A symmetric Bernoulli probability matrix, either in factored form
//
//   Omega = diag(theta) * Pi * P * Pi' * diag(theta)
//
// or as an explicit dense matrix. A factored matrix may carry the [0, 1]
// clipping of the regularized fitters; entries are clipped on evaluation and
// clipped_offdiagonal() counts the off-diagonal entries that actually moved.
class ProbMatrix {
 public:
  ProbMatrix() = default;  // empty, size 0
  static ProbMatrix factored(Eigen::VectorXd theta, Eigen::MatrixXd pi,
                             Eigen::MatrixXd p, bool clip_to_unit = false);
  static ProbMatrix dense(Eigen::MatrixXd omega);

  int size() const;
  bool is_factored() const { return !dense_.has_value(); }
  // Rank-K evaluation is exact: factored and no off-diagonal entry clipped.
  bool is_exact_low_rank() const {
    return is_factored() && clipped_offdiagonal_ == 0;
  }
  bool clipped() const { return clip_; }
  std::size_t clipped_offdiagonal() const { return clipped_offdiagonal_; }

  double operator()(int i, int j) const;
  Eigen::MatrixXd to_dense() const;

  // Factor F = diag(theta) * Pi (n x K) and core P; valid when is_factored().
  Eigen::MatrixXd left_factor() const;
  const Eigen::VectorXd& theta() const { return theta_; }
  const Eigen::MatrixXd& pi() const { return pi_; }
  const Eigen::MatrixXd& p() const { return p_; }

 private:
  Eigen::VectorXd theta_;
  Eigen::MatrixXd pi_;
  Eigen::MatrixXd p_;
  bool clip_ = false;
  std::size_t clipped_offdiagonal_ = 0;
  std::optional<Eigen::MatrixXd> dense_;
};

}  // namespace blockgof

#endif  // BLOCKGOF_PROB_MATRIX_HPP_
