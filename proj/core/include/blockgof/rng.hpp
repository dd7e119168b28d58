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

#ifndef BLOCKGOF_RNG_HPP_
#define BLOCKGOF_RNG_HPP_

#include <array>
#include <cstdint>

namespace blockgof {

// SplitMix64 step. Used to expand seeds and to derive independent streams.
std::uint64_t splitmix64(std::uint64_t& state);

// xoshiro256** generator with platform-independent variate generation.
//
// All distributions are implemented here rather than through <random> so that
// a given seed yields identical draws on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Stream for replicate/worker `index` of a run seeded with `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  // Standard normal (Marsaglia polar method).
  double normal();
  // Gamma(shape, 1) via Marsaglia-Tsang; shape > 0.
  double gamma(double shape);
  bool bernoulli(double p) { return uniform() < p; }

  // Child generator; advances this one.
  Rng split();

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace blockgof

#endif  // BLOCKGOF_RNG_HPP_
