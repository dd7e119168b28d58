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

#include "blockgof/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "blockgof/errors.hpp"

namespace blockgof {

Network Network::from_edges(int n, std::span<const Edge> edges,
                            LoadStats* stats) {
  if (n < 3) {
    throw ValidationError("network needs at least 3 nodes, got " +
                          std::to_string(n));
  }
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ValidationError("edge (" + std::to_string(a) + ", " +
                            std::to_string(b) + ") out of range for n = " +
                            std::to_string(n));
    }
    if (a == b) {
      ++loops;
      continue;
    }
    canon.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(canon.begin(), canon.end());
  const std::size_t before = canon.size();
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (stats != nullptr) {
    stats->self_loops_dropped += loops;
    stats->duplicates_collapsed += before - canon.size();
  }

  Network net;
  net.n_ = n;
  net.edges_ = std::move(canon);
  net.offsets_.assign(n + 1, 0);
  for (auto [a, b] : net.edges_) {
    ++net.offsets_[a + 1];
    ++net.offsets_[b + 1];
  }
  std::partial_sum(net.offsets_.begin(), net.offsets_.end(),
                   net.offsets_.begin());
  net.neighbors_.resize(net.offsets_[n]);
  std::vector<int> fill(net.offsets_.begin(), net.offsets_.end() - 1);
  for (auto [a, b] : net.edges_) {
    net.neighbors_[fill[a]++] = b;
    net.neighbors_[fill[b]++] = a;
  }
  for (int i = 0; i < n; ++i) {
    std::sort(net.neighbors_.begin() + net.offsets_[i],
              net.neighbors_.begin() + net.offsets_[i + 1]);
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(net.neighbors_.size());
  for (int i = 0; i < n; ++i) {
    for (int j : net.neighbors(i)) triplets.emplace_back(i, j, 1.0);
  }
  net.adjacency_.resize(n, n);
  net.adjacency_.setFromTriplets(triplets.begin(), triplets.end());
  net.adjacency_.makeCompressed();
  return net;
}

std::span<const int> Network::neighbors(int i) const {
  return {neighbors_.data() + offsets_[i],
          static_cast<std::size_t>(offsets_[i + 1] - offsets_[i])};
}

Eigen::VectorXd Network::degrees() const {
  Eigen::VectorXd d(n_);
  for (int i = 0; i < n_; ++i) d(i) = degree(i);
  return d;
}

bool Network::has_edge(int i, int j) const {
  auto nb = neighbors(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, long long& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

// Handles "# key=value" header comments; ignores everything else.
void parse_header(std::string_view body, std::size_t line_no, int& base,
                  long long& declared_n) {
  std::istringstream tokens{std::string(body)};
  std::string tok;
  while (tokens >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = tok.substr(0, eq);
    const std::string_view value = std::string_view(tok).substr(eq + 1);
    long long v = 0;
    if (key == "base") {
      if (!parse_int(value, v) || (v != 0 && v != 1)) {
        throw ParseError(line_no, "base must be 0 or 1");
      }
      base = static_cast<int>(v);
    } else if (key == "n") {
      if (!parse_int(value, v) || v < 0) {
        throw ParseError(line_no, "n must be a nonnegative integer");
      }
      declared_n = v;
    }
  }
}

}  // namespace

Network load_edge_list(std::istream& in, LoadStats* stats) {
  int base = 0;
  long long declared_n = -1;
  std::vector<std::pair<long long, long long>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      parse_header(body.substr(1), line_no, base, declared_n);
      continue;
    }
    std::istringstream tokens{std::string(body)};
    std::string a, b, extra;
    long long i = 0, j = 0;
    if (!(tokens >> a >> b) || !parse_int(a, i) || !parse_int(b, j)) {
      throw ParseError(line_no, "expected two integer node labels, got '" +
                                    std::string(body) + "'");
    }
    if (tokens >> extra) {
      throw ParseError(line_no, "trailing token '" + extra + "'");
    }
    raw.emplace_back(i, j);
  }
  if (stats != nullptr) stats->lines_read += line_no;
  if (raw.empty()) throw ValidationError("edge list contains no edges");

  long long max_label = -1;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (std::size_t e = 0; e < raw.size(); ++e) {
    const long long i = raw[e].first - base;
    const long long j = raw[e].second - base;
    if (i < 0 || j < 0) {
      throw ParseError(0, "negative node label after applying base=" +
                              std::to_string(base));
    }
    if (i > (1LL << 30) || j > (1LL << 30)) {
      throw ParseError(0, "node label too large");
    }
    max_label = std::max({max_label, i, j});
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  long long n = max_label + 1;
  if (declared_n >= 0) {
    if (declared_n < n) {
      throw ValidationError("declared n=" + std::to_string(declared_n) +
                            " is smaller than the largest label + 1");
    }
    n = declared_n;
  }
  Network net = Network::from_edges(static_cast<int>(n), edges, stats);
  if (net.num_edges() == 0) {
    throw ValidationError("edge list contains only self-loops");
  }
  return net;
}

Network load_edge_list(const std::filesystem::path& path, LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open edge list " + path.string());
  return load_edge_list(in, stats);
}

void save_edge_list(const Network& net, std::ostream& out) {
  out << "# base=0 n=" << net.num_nodes() << '\n';
  for (auto [i, j] : net.edges()) out << i << ' ' << j << '\n';
}

void save_edge_list(const Network& net, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write edge list " + path.string());
  save_edge_list(net, out);
}

DegreeStats degree_stats(const Network& net) {
  DegreeStats s;
  const int n = net.num_nodes();
  int lo = net.degree(0), hi = net.degree(0);
  for (int i = 1; i < n; ++i) {
    lo = std::min(lo, net.degree(i));
    hi = std::max(hi, net.degree(i));
  }
  s.d_min = lo;
  s.d_max = hi;
  s.d_bar = 2.0 * static_cast<double>(net.num_edges()) / n;
  return s;
}

void write_degree_stats_csv(const DegreeStats& stats, std::ostream& out) {
  out << "d_min,d_max,d_bar\n"
      << stats.d_min << ',' << stats.d_max << ',' << stats.d_bar << '\n';
}

Network giant_component(const Network& net, std::vector<int>* original_index) {
  const int n = net.num_nodes();
  std::vector<int> comp(n, -1);
  std::vector<int> sizes;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (int v : net.neighbors(u)) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
  }
  const int best = static_cast<int>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  std::vector<int> relabel(n, -1);
  std::vector<int> origin;
  for (int i = 0; i < n; ++i) {
    if (comp[i] == best) {
      relabel[i] = static_cast<int>(origin.size());
      origin.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (auto [i, j] : net.edges()) {
    if (comp[i] == best) edges.emplace_back(relabel[i], relabel[j]);
  }
  if (original_index != nullptr) *original_index = origin;
  return Network::from_edges(static_cast<int>(origin.size()), edges);
}

KnnSpTuning knnsp_tuning(int n, const DegreeStats& degrees, int k) {
  if (k < 1) throw ValidationError("K must be positive");
  if (degrees.d_min <= 0.0) {
    throw ValidationError(
        "KNN-SP tuning needs d_min > 0; restrict the network to its giant "
        "component first");
  }
  KnnSpTuning t;
  t.alpha = (n / k) > 20 ? 20.0 : 5.0;
  const double ratio = k * (degrees.d_bar / degrees.d_min) / 250.0;
  const double m0 = std::round(ratio * ratio);
  const double size_term = std::min(10.0, n / 10.0);
  t.neighbors = std::max(1, static_cast<int>(std::round((m0 + 1.0) * size_term)));
  return t;
}

KnnSpTuning knnsp_tuning(const Network& net, int k) {
  return knnsp_tuning(net.num_nodes(), degree_stats(net), k);
}

}  // namespace blockgof
