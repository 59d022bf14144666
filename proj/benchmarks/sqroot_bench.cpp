// Copyright 2026 The sqroot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "sqroot/gen.hpp"
#include "sqroot/maxroot.hpp"
#include "sqroot/minroot.hpp"
#include "sqroot/oracle.hpp"

namespace sqroot {
namespace {

// Args: n, k.
void BM_MinRootPlanted(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  std::vector<PlantedInstance> insts;
  for (std::uint64_t s = 0; s < 8; ++s) insts.push_back(gen_tree_plus_k(n, k, s));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& inst = insts[i++ % insts.size()];
    benchmark::DoNotOptimize(min_square_root(inst.square, inst.k_true));
  }
}
BENCHMARK(BM_MinRootPlanted)
    ->ArgsProduct({{20, 40, 80}, {0, 1, 2, 3}})
    ->Unit(benchmark::kMicrosecond);

void BM_MinRootCycleSquare(benchmark::State& state) {
  const auto inst = gen_known_square(KnownFamily::kCycleSquare, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_square_root(inst.square, 1));
}
BENCHMARK(BM_MinRootCycleSquare)->Arg(7)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_Kernelize(benchmark::State& state) {
  const auto inst = gen_known_square(KnownFamily::kCycleSquare, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernelize(inst.square, 1));
}
BENCHMARK(BM_Kernelize)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

// Args: n, k. Squares of cycles lose exactly n edges.
void BM_MaxRootFpt(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const Graph g = gen_known_square(KnownFamily::kCycleSquare, n).square;
  for (auto _ : state) benchmark::DoNotOptimize(max_root_fpt(g, k));
}
BENCHMARK(BM_MaxRootFpt)->Args({7, 7})->Args({9, 9})->Args({11, 11})
    ->Unit(benchmark::kMicrosecond);

void BM_MaxRootExact(benchmark::State& state) {
  const Graph g = gen_random_connected(static_cast<int>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(max_root_exact(g));
}
BENCHMARK(BM_MaxRootExact)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_OracleMin(benchmark::State& state) {
  const Graph g = gen_known_square(KnownFamily::kCycleSquare, static_cast<int>(state.range(0))).square;
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_min_root(g, 1, {jobs, nullptr}));
}
BENCHMARK(BM_OracleMin)->Args({7, 1})->Args({8, 1})->Args({8, 4})
    ->Unit(benchmark::kMillisecond);

void BM_AuxGraph(benchmark::State& state) {
  const Graph g = gen_random_connected(static_cast<int>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(build_aux_graph(g));
}
BENCHMARK(BM_AuxGraph)->Arg(20)->Arg(60)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace sqroot

BENCHMARK_MAIN();
