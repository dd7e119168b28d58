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

#include "blockgof/matrix_io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <string>
#include <string_view>

#include "blockgof/errors.hpp"

namespace blockgof {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view s, int line) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(line, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Eigen::MatrixXd read_dense_matrix(std::istream& in) {
  std::string text;
  int line = 0;
  long long n = -1;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view t = trim(text);
    if (t.empty()) continue;
    if (t.substr(0, 2) != "n=") throw ParseError(line, "expected header 'n=<N>'");
    const std::string_view num = t.substr(2);
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), n);
    if (ec != std::errc() || ptr != num.data() + num.size() || n < 1) {
      throw ParseError(line, "bad matrix order in header");
    }
    break;
  }
  if (n < 1) throw ParseError(line, "missing header 'n=<N>'");

  Eigen::MatrixXd m(n, n);
  long long row = 0;
  while (row < n && std::getline(in, text)) {
    ++line;
    std::string_view rest = trim(text);
    if (rest.empty()) continue;
    long long col = 0;
    while (true) {
      const auto comma = rest.find(',');
      if (col >= n) throw ParseError(line, "too many columns");
      m(row, col++) = parse_double(rest.substr(0, comma), line);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (col != n) throw ParseError(line, "expected " + std::to_string(n) + " columns");
    ++row;
  }
  if (row != n) throw ParseError(line, "expected " + std::to_string(n) + " rows");
  return m;
}

Eigen::MatrixXd read_dense_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path.string());
  return read_dense_matrix(in);
}

void write_dense_matrix(const Eigen::MatrixXd& m, std::ostream& out) {
  if (m.rows() != m.cols()) throw DimensionError("matrix must be square");
  out << "n=" << m.rows() << '\n' << std::setprecision(17);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << m(i, j);
    }
    out << '\n';
  }
}

void write_dense_matrix(const Eigen::MatrixXd& m, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  write_dense_matrix(m, out);
}

}  // namespace blockgof
