// Copyright 2026 The bondperc Authors
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

#include "bondperc/bondperc.hpp"

namespace bp = bondperc;

namespace {

void BM_Philox(benchmark::State& state) {
  bp::CounterStream stream(42, 0);
  for (auto _ : state) benchmark::DoNotOptimize(stream.next_u64());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Philox);

void BM_ClusterOf(benchmark::State& state) {
  const bp::Graph g = bp::hypercube(10);
  bp::CounterStream stream(1, 0);
  const bp::EdgeConfig cfg = bp::sample_config(g, 0.2, stream);
  const auto method = static_cast<bp::ClusterMethod>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bp::cluster_of(g, cfg, 0, method).size);
  state.SetLabel(method == bp::ClusterMethod::Bfs ? "bfs" : "union-find");
}
BENCHMARK(BM_ClusterOf)->Arg(static_cast<int>(bp::ClusterMethod::UnionFind))
    ->Arg(static_cast<int>(bp::ClusterMethod::Bfs));

void BM_EstimateMoments(benchmark::State& state) {
  const bp::Graph g = bp::dodecahedron();
  const auto reps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bp::estimate_moments(g, 0.35, reps, 1).mean_s);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EstimateMoments)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_MomentPolynomial(benchmark::State& state) {
  const bp::Graph g = bp::cube();
  for (auto _ : state) benchmark::DoNotOptimize(bp::moment_polynomial(g).n_edges);
}
BENCHMARK(BM_MomentPolynomial)->Unit(benchmark::kMillisecond);

void BM_BranchingBounds(benchmark::State& state) {
  double p = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bp::branching_bounds(bp::BoundParams::make(3, 20, p)).second);
    p = p < 0.9 ? p + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_BranchingBounds);

}  // namespace

BENCHMARK_MAIN();
