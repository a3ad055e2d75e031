// Copyright 2026 The dicolor Authors
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
#include <set>

#include "dicolor/generator.hpp"
#include "dicolor/inversion.hpp"
#include "dicolor/oracle.hpp"
#include "dicolor/ordering_condition.hpp"

namespace {

using dicolor::Arc;
using dicolor::Digraph;
using dicolor::Ordering;

// n vertices, exactly m distinct arcs.
Digraph sparse_digraph(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<Arc> arcs;
  while (arcs.size() < m) {
    const std::size_t u = rng() % n;
    const std::size_t v = rng() % n;
    if (u == v || !seen.emplace(u, v).second) continue;
    arcs.push_back({u, v});
  }
  return Digraph(n, std::move(arcs));
}

void BM_CheckOrdering(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto k = static_cast<std::size_t>(state.range(1));
  const Digraph d = sparse_digraph(n, 10 * n, 1);
  const Ordering order = Ordering::identity(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicolor::check_ordering(d, order, k));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(d.arc_count()));
}
BENCHMARK(BM_CheckOrdering)
    ->Args({1'000, 2})
    ->Args({1'000, 1'000})
    ->Args({10'000, 2})
    ->Args({10'000, 10'000})
    ->Unit(benchmark::kMillisecond);

void BM_MinForwardRatio(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph d = sparse_digraph(n, 4 * n, 2);
  const Ordering order = Ordering::random(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicolor::min_forward_ratio(d, order));
  }
}
BENCHMARK(BM_MinForwardRatio)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_MakeTwoDicolorable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph d = sparse_digraph(n, 10 * n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicolor::make_two_dicolorable(d));
  }
}
BENCHMARK(BM_MakeTwoDicolorable)->Arg(100)->Arg(1'000)->Unit(benchmark::kMillisecond);

void BM_DichromaticNumber(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph d = dicolor::random_digraph(n, 0.4, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicolor::oracle::dichromatic_number(d));
  }
}
BENCHMARK(BM_DichromaticNumber)->DenseRange(6, 12, 3);

void BM_BestKOverOrderings(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Digraph d = dicolor::random_digraph(n, 0.4, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dicolor::oracle::best_k_over_orderings(d));
  }
}
BENCHMARK(BM_BestKOverOrderings)->DenseRange(5, 7, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
