// Copyright 2026 The khwp Authors
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

#include "khwp/approx_2hwp.hpp"
#include "khwp/generate.hpp"
#include "khwp/hypergraph_solver.hpp"
#include "khwp/oracle.hpp"
#include "khwp/tree_solvers.hpp"

namespace {

using namespace khwp;

void BM_OneHwpTree(benchmark::State& state) {
  Rng rng(1);
  auto t = random_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(one_hwp_tree(t));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OneHwpTree)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_KRhwpTree(benchmark::State& state) {
  Rng rng(2);
  auto t = random_tree(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(k_rhwp_tree(t, 4));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_KRhwpTree)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_Simple3Approx(benchmark::State& state) {
  Rng rng(3);
  auto g = random_connected_graph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(simple_3approx(g));
}
BENCHMARK(BM_Simple3Approx)->Arg(8)->Arg(16)->Arg(32);

void BM_Alg2(benchmark::State& state) {
  Rng rng(4);
  auto g = random_connected_graph(static_cast<int>(state.range(0)), 0.3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(alg2(g, PackingMode::LocalSearch));
}
BENCHMARK(BM_Alg2)->Arg(8)->Arg(12)->Arg(16);

void BM_ExactH2(benchmark::State& state) {
  Rng rng(5);
  auto g = random_connected_graph(static_cast<int>(state.range(0)), 0.4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(exact_hk(g, 2));
}
BENCHMARK(BM_ExactH2)->DenseRange(6, 10, 2);

void BM_Hypergraph(benchmark::State& state) {
  Rng rng(6);
  auto h = random_hypergraph(12, static_cast<int>(state.range(0)), 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(solve_khwp_hypergraph(h));
}
BENCHMARK(BM_Hypergraph)->Arg(10)->Arg(20)->Arg(40);

}  // namespace

BENCHMARK_MAIN();
