// Copyright 2026 The gidnet Authors
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

// Serial reference kernels against their OpenMP counterparts on lattice
// circuits. Argument: qubit count (square lattice, depth 11).

#include <benchmark/benchmark.h>

#include <cmath>

#include "gidnet/benchgen.hpp"
#include "gidnet/matrices.hpp"
#include "gidnet/reuse.hpp"

namespace {

using namespace gidnet;

Circuit lattice(std::int64_t n) {
  const auto side = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  return gen_grcs({side, side, 11, 1});
}

void BM_BiadjacencySerial(benchmark::State& state) {
  const CircuitDag dag = build_dag(lattice(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(biadjacency_serial(dag));
}

void BM_BiadjacencyParallel(benchmark::State& state) {
  const CircuitDag dag = build_dag(lattice(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(biadjacency(dag, 0));
}

SearchConfig search_config() {
  SearchConfig cfg;
  cfg.iterations = 16;
  cfg.seed = 7;
  return cfg;
}

void BM_SearchSerial(benchmark::State& state) {
  const CandidateMatrix c = candidate_matrix(lattice(state.range(0)));
  const SearchConfig cfg = search_config();
  for (auto _ : state) benchmark::DoNotOptimize(search_serial(c, cfg));
}

void BM_SearchParallel(benchmark::State& state) {
  const CandidateMatrix c = candidate_matrix(lattice(state.range(0)));
  SearchConfig cfg = search_config();
  cfg.threads = 0;
  for (auto _ : state) benchmark::DoNotOptimize(search_parallel(c, cfg));
}

constexpr std::int64_t kSizes[] = {16, 64, 144, 256, 400};

void sizes(benchmark::internal::Benchmark* b) {
  for (auto n : kSizes) b->Arg(n);
  b->Unit(benchmark::kMicrosecond);
}

BENCHMARK(BM_BiadjacencySerial)->Apply(sizes);
BENCHMARK(BM_BiadjacencyParallel)->Apply(sizes);
BENCHMARK(BM_SearchSerial)->Apply(sizes);
BENCHMARK(BM_SearchParallel)->Apply(sizes);

}  // namespace

BENCHMARK_MAIN();
