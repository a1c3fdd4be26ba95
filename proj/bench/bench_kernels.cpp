// Copyright 2026 The Authors.
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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "zonotopal/config_matroid.h"
#include "zonotopal/corpus.h"
#include "zonotopal/graph.h"
#include "zonotopal/power_ideal.h"
#include "zonotopal/reconstruction.h"
#include "zonotopal/reference.h"
#include "zonotopal/squarefree.h"
#include "zonotopal/zonotope.h"

namespace {

using namespace zonotopal;

VectorConfig wide_config(std::size_t m) {
  corpus::Rng rng(1);
  return VectorConfig(corpus::random_matrix(rng, 3, m, false, false));
}

Zonotope lattice_case() {
  return facet_data(VectorConfig(QMatrix{{3, -2, 1, 2, 0, 1}, {1, 3, -2, 1, 2, 0}, {0, 1, 3, -1, 1, 2}}));
}

Graph dense_graph() {
  Graph g{6, {}};
  for (std::size_t u = 0; u < 6; ++u)
    for (std::size_t v = u + 1; v < 6; ++v) g.edges.emplace_back(u, v);
  g.edges.emplace_back(0, 1);
  g.edges.emplace_back(2, 3);
  return g;
}

void BM_TutteSerial(benchmark::State& state) {
  const VectorConfig c = wide_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(reference::tutte(c));
}
void BM_TutteParallel(benchmark::State& state) {
  const VectorConfig c = wide_config(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tutte(c));
}
BENCHMARK(BM_TutteSerial)->Arg(10)->Arg(14);
BENCHMARK(BM_TutteParallel)->Arg(10)->Arg(14);

void BM_LatticeSerial(benchmark::State& state) {
  const Zonotope z = lattice_case();
  for (auto _ : state) benchmark::DoNotOptimize(reference::lattice_count(z, false));
}
void BM_LatticeParallel(benchmark::State& state) {
  const Zonotope z = lattice_case();
  for (auto _ : state) benchmark::DoNotOptimize(lattice_points(z, false).count);
}
BENCHMARK(BM_LatticeSerial);
BENCHMARK(BM_LatticeParallel);

void BM_HilbertSerial(benchmark::State& state) {
  const auto p = ideal_generators(facet_data(wide_config(7)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::hilbert_series(p));
}
void BM_HilbertParallel(benchmark::State& state) {
  const auto p = ideal_generators(facet_data(wide_config(7)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_series(p));
}
BENCHMARK(BM_HilbertSerial);
BENCHMARK(BM_HilbertParallel);

void BM_ForestsSerial(benchmark::State& state) {
  const Graph g = dense_graph();
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_forests(g));
}
void BM_ForestsParallel(benchmark::State& state) {
  const Graph g = dense_graph();
  for (auto _ : state) benchmark::DoNotOptimize(count_forests(g));
}
BENCHMARK(BM_ForestsSerial);
BENCHMARK(BM_ForestsParallel);

void BM_ReconstructSerial(benchmark::State& state) {
  const LengthOracle oracle = make_length_oracle(QMatrix{{1, 0, 1, 2, 1}, {0, 1, 1, 1, -1}, {1, 1, 0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(reference::reconstruct(oracle));
}
void BM_ReconstructParallel(benchmark::State& state) {
  const LengthOracle oracle = make_length_oracle(QMatrix{{1, 0, 1, 2, 1}, {0, 1, 1, 1, -1}, {1, 1, 0, 1, 2}});
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(oracle));
}
BENCHMARK(BM_ReconstructSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReconstructParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
