// Copyright 2026 The outlierseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "outlierseq/cluster_tests.hpp"
#include "outlierseq/gl_tests.hpp"
#include "outlierseq/rng.hpp"
#include "outlierseq/scenario.hpp"
#include "outlierseq/selection.hpp"

namespace {

using namespace outlierseq;

std::vector<Pmf> instance(std::size_t m, std::size_t n, std::uint64_t seed) {
  ScenarioSpec spec;
  spec.kind = ScenarioKind::kIdenticalBoth;
  spec.alphabet_size = 10;
  spec.m = m;
  spec.t = std::max<std::size_t>(1, m / 5);
  Engine srng = scenario_engine(0);
  const Scenario sc = build_scenario(spec, srng);
  Engine rng = trial_engine(seed, n, m);
  return sample_empiricals(sc, n, rng);
}

void BM_Delta3(benchmark::State& state) {
  const auto g = instance(static_cast<std::size_t>(state.range(0)), 200, 1);
  for (auto _ : state) benchmark::DoNotOptimize(delta3(g, StopRule::until_convergence()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delta3)->RangeMultiplier(2)->Range(50, 3200)->Complexity(benchmark::oN);

void BM_Delta2(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto g = instance(m, 200, 2);
  for (auto _ : state) benchmark::DoNotOptimize(delta2(g, m / 5, StopRule::until_convergence()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delta2)->RangeMultiplier(2)->Range(50, 3200)->Complexity(benchmark::oN);

void BM_GlKnown(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const auto g = instance(m, 200, 3);
  for (auto _ : state) benchmark::DoNotOptimize(gl_test_known_t(g, 3));
}
BENCHMARK(BM_GlKnown)->DenseRange(10, 25, 5);

void BM_GlUnknown(benchmark::State& state) {
  const auto g = instance(static_cast<std::size_t>(state.range(0)), 200, 4);
  for (auto _ : state) benchmark::DoNotOptimize(gl_test_unknown(g));
}
BENCHMARK(BM_GlUnknown)->DenseRange(8, 16, 4);

std::vector<double> values(std::size_t len) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> v(len);
  for (auto& x : v) x = u(rng);
  return v;
}

void BM_KthSmallest(benchmark::State& state) {
  const auto v = values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kth_smallest(v, (v.size() + 1) / 2));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KthSmallest)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);

void BM_TopT(benchmark::State& state) {
  const auto v = values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(top_t_largest(v, v.size() / 5));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TopT)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);

}  // namespace

BENCHMARK_MAIN();
