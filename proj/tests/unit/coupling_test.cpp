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

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <set>

#include "bondperc/coupling.hpp"
#include "bondperc/error.hpp"
#include "support/oracles.hpp"

namespace bondperc {
namespace {

using testing::k3;

void expect_trace_invariants(const GenerationTrace& trace, std::size_t n) {
  ASSERT_EQ(trace.layers.size(), n);
  ASSERT_EQ(trace.counts.size(), n);
  std::set<Vertex> seen;
  bool ended = false;
  for (std::size_t gen = 0; gen < n; ++gen) {
    EXPECT_EQ(trace.counts[gen], trace.layers[gen].size());
    for (Vertex v : trace.layers[gen]) EXPECT_TRUE(seen.insert(v).second) << "vertex reused";
    if (ended) EXPECT_EQ(trace.counts[gen], 0u);
    if (trace.counts[gen] == 0) ended = true;
    if (gen + 1 < n && trace.counts[gen] > 0) {
      std::size_t children = 0;
      for (auto c : trace.per_particle_offspring[gen]) children += c;
      EXPECT_EQ(children, trace.counts[gen + 1]);
    }
  }
}

TEST(BirthProcess, TriangleHandTraces) {
  const Graph g = k3();
  // edge ids: 0 = (0,1), 1 = (0,2), 2 = (1,2)
  const GenerationTrace star = run_birth_process(g, EdgeConfig({1, 1, 0}, 0.5), 0);
  EXPECT_EQ(star.counts, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(star.total(), 3u);
  EXPECT_EQ(star.layers[1], (std::vector<Vertex>{1, 2}));

  const GenerationTrace full = run_birth_process(g, EdgeConfig::all_open(3), 0);
  EXPECT_EQ(full.counts, (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(full.per_particle_offspring[1], (std::vector<std::size_t>{0, 0}));

  const GenerationTrace path = run_birth_process(g, EdgeConfig({1, 0, 1}, 0.5), 0);
  EXPECT_EQ(path.counts, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(BirthProcess, AllClosed) {
  const Graph g = dodecahedron();
  const GenerationTrace t = run_birth_process(g, EdgeConfig::all_closed(g.n_edges()), 5);
  EXPECT_EQ(t.counts[0], 1u);
  EXPECT_EQ(t.total(), 1u);
  EXPECT_EQ(t.layers[0], (std::vector<Vertex>{5}));
}

TEST(BirthProcess, Errors) {
  EXPECT_THROW(run_birth_process(k3(), EdgeConfig::all_open(3), 3), Error);
  EXPECT_THROW(run_birth_process(k3(), EdgeConfig::all_open(4), 0), Error);
}

// Total equals the cluster size; layer n is exactly the set at open-path
// distance n (checked against Bellman-Ford distances).
TEST(BirthProcess, LayersAreDistanceShells) {
  for (const Graph& g : {k3(), tetrahedron(), cube(), octahedron(), dodecahedron()}) {
    for (std::uint64_t r = 0; r < 400; ++r) {
      CounterStream s(21, r);
      const double p = s.uniform();
      const auto x = static_cast<Vertex>(s.uniform_index(g.n_vertices()));
      const EdgeConfig config = sample_config(g, p, s);
      const GenerationTrace trace = run_birth_process(g, config, x);
      expect_trace_invariants(trace, g.n_vertices());
      ASSERT_EQ(trace.total(), cluster_of(g, config, x).size);

      const auto dist = testing::open_distances(g, config, x);
      for (std::size_t gen = 0; gen < g.n_vertices(); ++gen) {
        std::vector<Vertex> shell;
        for (Vertex y = 0; y < g.n_vertices(); ++y)
          if (dist[y] == gen) shell.push_back(y);
        std::vector<Vertex> layer = trace.layers[gen];
        std::sort(layer.begin(), layer.end());
        ASSERT_EQ(layer, shell) << "generation " << gen;
      }
    }
  }
}

TEST(BirthProcess, CountsIndependentOfParticleOrder) {
  const Graph g = dodecahedron();
  for (std::uint64_t r = 0; r < 300; ++r) {
    CounterStream s(8, r);
    const EdgeConfig config = sample_config(g, 0.6, s);
    const auto x = static_cast<Vertex>(s.uniform_index(g.n_vertices()));
    CounterStream shuffler(99, r);
    const ParticleOrder shuffle = [&](std::vector<Vertex>& layer) {
      for (std::size_t i = layer.size(); i > 1; --i) {
        std::swap(layer[i - 1], layer[shuffler.uniform_index(i)]);
      }
    };
    const GenerationTrace canonical = run_birth_process(g, config, x);
    const GenerationTrace shuffled = run_birth_process(g, config, x, shuffle);
    ASSERT_EQ(canonical.counts, shuffled.counts);
    expect_trace_invariants(shuffled, g.n_vertices());
  }
}

TEST(Binomial, MatchesPmf) {
  for (auto [n, p] : {std::pair{3u, 0.3}, std::pair{2u, 0.8}, std::pair{5u, 0.5}}) {
    std::array<int, 6> hist{};
    constexpr int kDraws = 60000;
    CounterStream s(n, 1);
    for (int i = 0; i < kDraws; ++i) ++hist[sample_binomial(n, p, s)];
    double chi2 = 0;
    for (unsigned k = 0; k <= n; ++k) {
      const double expected = kDraws * testing::binomial_pmf(n, k, p);
      chi2 += (hist[k] - expected) * (hist[k] - expected) / expected;
    }
    EXPECT_LT(chi2, 20.5) << "n=" << n << " p=" << p;  // chi-square(<=5) 0.1% point
  }
  CounterStream s(0, 0);
  EXPECT_EQ(sample_binomial(4, 0.0, s), 0u);
  EXPECT_EQ(sample_binomial(4, 1.0, s), 4u);
  EXPECT_EQ(sample_binomial(0, 0.5, s), 0u);
}

TEST(Branching, DeterministicCases) {
  CounterStream s(1, 1);
  const BranchingTrace none = sample_branching_generations(3, 0.0, 4, s);
  EXPECT_EQ(none.generation_sizes, (std::vector<std::uint64_t>{1, 0, 0, 0, 0}));
  EXPECT_EQ(none.total, 1u);

  const BranchingTrace single = sample_branching_generations(1, 1.0, 1, s);
  EXPECT_EQ(single.generation_sizes, (std::vector<std::uint64_t>{1, 1}));
  EXPECT_EQ(single.total, 2u);

  const BranchingTrace tree = sample_branching_generations(3, 1.0, 2, s);
  EXPECT_EQ(tree.generation_sizes, (std::vector<std::uint64_t>{1, 3, 6}));
  EXPECT_EQ(tree.total, 10u);
}

// At p = 1 the tree is deterministic: 1, D, D(D-1), ..., D(D-1)^{R-1}.
TEST(Branching, FullTreeTotals) {
  CounterStream s(2, 2);
  for (unsigned d = 2; d <= 5; ++d) {
    for (unsigned r = 1; r <= 7; ++r) {
      const BranchingTrace t = sample_branching_generations(d, 1.0, r, s);
      const std::uint64_t expected =
          d == 2 ? 1 + 2ull * r
                 : 1 + d * (static_cast<std::uint64_t>(std::llround(std::pow(d - 1, r))) - 1) / (d - 2);
      EXPECT_EQ(t.total, expected) << "D=" << d << " R=" << r;
      ASSERT_EQ(t.generation_sizes.size(), r + 1u);
    }
  }
}

TEST(Branching, TraceInvariantsAndErrors) {
  for (std::uint64_t r = 0; r < 500; ++r) {
    CounterStream s(3, r);
    const BranchingTrace t = sample_branching_generations(3, 0.45, 10, s);
    EXPECT_EQ(t.generation_sizes[0], 1u);
    std::uint64_t sum = 0;
    bool extinct = false;
    for (auto x : t.generation_sizes) {
      if (extinct) EXPECT_EQ(x, 0u);
      if (x == 0) extinct = true;
      sum += x;
    }
    EXPECT_EQ(sum, t.total);
  }
  CounterStream s(0, 0);
  EXPECT_THROW(sample_branching_generations(0, 0.5, 3, s), Error);
  EXPECT_THROW(sample_branching_generations(3, 0.5, 0, s), Error);
  EXPECT_THROW(sample_branching_generations(3, 1.5, 3, s), Error);
}

TEST(Dominance, ZeroProbabilityHasEmptyTails) {
  const DominanceReport rep = dominance_report(cube(), 0.0, 200, 4);
  for (const TailRow& row : rep.rows) {
    if (row.generation == 0) {
      EXPECT_EQ(row.k, 1u);
      EXPECT_EQ(row.tail_birth, 1.0);
      EXPECT_EQ(row.tail_branching, 1.0);
    } else {
      EXPECT_EQ(row.tail_birth, 0.0);
      EXPECT_EQ(row.tail_branching, 0.0);
    }
  }
  EXPECT_TRUE(rep.all_dominated());
}

TEST(Dominance, TriangleAtFullProbability) {
  const DominanceReport rep = dominance_report(k3(), 1.0, 50, 4);
  bool checked = false;
  for (const TailRow& row : rep.rows) {
    if (row.generation == 2 && row.k == 1) {
      EXPECT_EQ(row.tail_birth, 0.0);
      EXPECT_EQ(row.tail_branching, 1.0);
      checked = true;
    }
  }
  EXPECT_TRUE(checked);
  EXPECT_TRUE(rep.all_dominated());
}

TEST(Dominance, IndependentOfWorkerCount) {
  const DominanceReport a = dominance_report(octahedron(), 0.4, 3000, 10, 1);
  const DominanceReport b = dominance_report(octahedron(), 0.4, 3000, 10, 3);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].tail_birth, b.rows[i].tail_birth);
    EXPECT_EQ(a.rows[i].tail_branching, b.rows[i].tail_branching);
  }
}

TEST(Dominance, Errors) {
  EXPECT_THROW(dominance_report(k3(), 0.5, 0, 1), Error);
  EXPECT_THROW(dominance_report(k3(), 0.5, 10, 1, 0), Error);
  EXPECT_THROW(dominance_report(k3(), -1.0, 10, 1), Error);
}

}  // namespace
}  // namespace bondperc
