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

#ifndef BLOCKGOF_MATRIX_IO_HPP_
#define BLOCKGOF_MATRIX_IO_HPP_

#include <filesystem>
#include <iosfwd>

#include <Eigen/Core>

namespace blockgof {

// Dense square matrix CSV: a header line "n=<N>" followed by N rows of N
// comma-separated values. Throws ParseError with the offending line.
Eigen::MatrixXd read_dense_matrix(std::istream& in);
Eigen::MatrixXd read_dense_matrix(const std::filesystem::path& path);

// Round-trip exact (17 significant digits).
void write_dense_matrix(const Eigen::MatrixXd& m, std::ostream& out);
void write_dense_matrix(const Eigen::MatrixXd& m, const std::filesystem::path& path);

}  // namespace blockgof

#endif  // BLOCKGOF_MATRIX_IO_HPP_
