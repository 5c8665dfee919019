// Copyright 2026 The pairmatch Authors
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

// Serial versus OpenMP census, plus the pair solver on its own.

#include <benchmark/benchmark.h>

#include "pairmatch/census.hpp"
#include "pairmatch/disjoint_pairs.hpp"
#include "pairmatch/generators.hpp"

namespace pairmatch {
namespace {

AnalysisOptions options_for(const benchmark::State& state) {
  AnalysisOptions o;
  o.run_lemmas = state.range(1) != 0;
  return o;
}

void BM_CensusSerial(benchmark::State& state) {
  const auto corpus = exhaustive_corpus(static_cast<int>(state.range(0)));
  const auto options = options_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_census_serial(corpus, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size));
}

void BM_CensusParallel(benchmark::State& state) {
  const auto corpus = exhaustive_corpus(static_cast<int>(state.range(0)));
  const auto options = options_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_census_parallel(corpus, options));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size));
}

// Args: vertex count, lemmas on/off.
BENCHMARK(BM_CensusSerial)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->Args({5, 0})->Args({5, 1})->Args({6, 0})->Args({6, 1})->Unit(benchmark::kMillisecond);

void BM_SolvePairTight(benchmark::State& state) {
  const auto g = gen_tight_family(tight_family_base(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(solve_pair(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}

BENCHMARK(BM_SolvePairTight)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_SolvePairRandom(benchmark::State& state) {
  const auto g = gen_random(static_cast<int>(state.range(0)), 0.2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_pair(g));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}

BENCHMARK(BM_SolvePairRandom)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pairmatch

BENCHMARK_MAIN();
