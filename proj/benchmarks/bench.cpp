// Copyright 2026 The Rainbow Authors.
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

#include <random>

#include "rainbow/enrichment.hpp"
#include "rainbow/gallai_edmonds.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/matching.hpp"
#include "rainbow/rainbow_engine.hpp"
#include "rainbow/reach.hpp"
#include "rainbow/rng.hpp"
#include "rainbow/sweep.hpp"

namespace {

using namespace rainbow;

Graph random_graph(int n, int percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (bounded(rng, 100) < static_cast<std::uint64_t>(percent)) {
        edges.push_back(Edge(u, v));
      }
    }
  }
  return Graph(n, std::move(edges));
}

void BM_MaximumMatching(benchmark::State& state) {
  const Graph g = random_graph(static_cast<int>(state.range(0)), 30, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximum_matching(g));
  }
}
BENCHMARK(BM_MaximumMatching)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_ReachGlobal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 40, 2);
  // Drop one edge from the maximum matching so exposed sources exist and
  // the sweep over them does real work.
  Matching f = maximum_matching(g);
  if (!f.empty()) f = f.without_edge(f.edges().back());
  const auto cfg =
      ReachConfig::make(n, f, edge_list_minus(g.edges(), f.edges()));
  for (auto _ : state) {
    benchmark::DoNotOptimize(reach_global(cfg));
  }
}
BENCHMARK(BM_ReachGlobal)->Arg(12)->Arg(16)->Arg(24);

void BM_GeDecompose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_graph(n, 25, 3);
  const Matching f = maximum_matching(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ge_decompose(g, f));
  }
}
BENCHMARK(BM_GeDecompose)->Arg(16)->Arg(32);

void BM_RainbowSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const ColoredFamily family =
        random_family(n, 3 * n - 2, 14, mix64(seed++));
    benchmark::DoNotOptimize(rainbow_matching(family, n));
  }
}
BENCHMARK(BM_RainbowSolve)->Arg(3)->Arg(5);

void BM_BruteForceRainbow(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 100;
  for (auto _ : state) {
    const ColoredFamily family =
        random_family(n, 2 * n - 1, 2 * n + 2, mix64(seed++));
    benchmark::DoNotOptimize(brute_force_rainbow(family, n));
  }
}
BENCHMARK(BM_BruteForceRainbow)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
