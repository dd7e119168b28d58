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

#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "blockgof/cycles.hpp"
#include "blockgof/fitters.hpp"
#include "blockgof/graph.hpp"
#include "blockgof/rng.hpp"
#include "blockgof/sim.hpp"
#include "blockgof/spectral.hpp"

namespace blockgof {
namespace {

struct Fixture {
  GeneratedOmega truth;
  Network net;
};

// One DCMM network per size, cached across benchmark runs.
const Fixture& dcmm_network(int n) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Rng rng(12345);
    const GeneratedOmega full = gen_omega(experiment1(Model::kDcmm, n), rng);
    std::vector<int> kept;
    Network net = giant_component(sample_network(full.omega, rng), &kept);
    GeneratedOmega truth;
    truth.omega = full.omega(kept, kept);
    truth.params = {full.params.theta(kept), full.params.pi(kept, Eigen::all), full.params.p};
    it = cache.emplace(n, Fixture{std::move(truth), std::move(net)}).first;
  }
  return it->second;
}

void BM_CountC3(benchmark::State& state) {
  const Fixture& f = dcmm_network(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_c3(f.net));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountC3)->RangeMultiplier(2)->Range(250, 4000)->Complexity();

void BM_UN3LowRank(benchmark::State& state) {
  const Fixture& f = dcmm_network(static_cast<int>(state.range(0)));
  const ModelParams& p = f.truth.params;
  const ProbMatrix omega = ProbMatrix::factored(p.theta, p.pi, p.p);
  for (auto _ : state) benchmark::DoNotOptimize(u_n3(f.net, omega));
}
BENCHMARK(BM_UN3LowRank)->RangeMultiplier(2)->Range(250, 4000);

void BM_UN3Dense(benchmark::State& state) {
  const Fixture& f = dcmm_network(static_cast<int>(state.range(0)));
  const ProbMatrix omega = ProbMatrix::dense(f.truth.omega);
  for (auto _ : state) benchmark::DoNotOptimize(u_n3(f.net, omega));
}
BENCHMARK(BM_UN3Dense)->RangeMultiplier(2)->Range(250, 2000);

void BM_TopKEigs(benchmark::State& state) {
  const Fixture& f = dcmm_network(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(top_k_eigs(f.net, 2).values);
}
BENCHMARK(BM_TopKEigs)->RangeMultiplier(2)->Range(250, 4000);

void BM_FitDcmm(benchmark::State& state) {
  const Fixture& f = dcmm_network(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fit(Model::kDcmm, f.net, 2).omega.size());
}
BENCHMARK(BM_FitDcmm)->RangeMultiplier(2)->Range(250, 2000);

}  // namespace
}  // namespace blockgof

BENCHMARK_MAIN();
