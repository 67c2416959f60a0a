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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "bondperc/graph.hpp"
#include "bondperc/percolation.hpp"
#include "bondperc/random.hpp"

namespace bondperc {

/// Layered occupation of the open cluster of a start vertex.
///
/// Entry n of each field describes generation n, for n = 0..N-1. Generation
/// n consists of the vertices at open-path distance n from the start, listed
/// in the order their particles reproduce.
struct GenerationTrace {
  std::vector<std::vector<Vertex>> layers;
  std::vector<std::size_t> counts;
  /// per_particle_offspring[n][i]: children of the i-th particle of layer n.
  std::vector<std::vector<std::size_t>> per_particle_offspring;

  std::size_t total() const noexcept;
};

/// Optional hook that permutes a generation before its particles reproduce.
using ParticleOrder = std::function<void(std::vector<Vertex>&)>;

/// Birth process on a fixed realization. The start vertex holds generation
/// 0; each particle of generation n, in turn, places a child on every empty
/// neighbor joined to it by an open edge. Children are listed by parent order,
/// then by the parent's (ascending) neighbor order, unless `reorder` is given.
///
/// Throws BadIndex or BadParameter as cluster_of does.
GenerationTrace run_birth_process(const Graph& graph, const EdgeConfig& config, Vertex x,
                                  const ParticleOrder& reorder = {});

struct BranchingTrace {
  std::vector<std::uint64_t> generation_sizes;  // X_0..X_R
  std::uint64_t total = 0;
};

/// Binomial(n, p) by CDF inversion from one uniform. Intended for small n.
std::uint32_t sample_binomial(std::uint32_t n, double p, CounterStream& stream);

/// Galton-Watson process with one ancestor, Binomial(D, p) children for the
/// ancestor and Binomial(D-1, p) for every later individual, truncated after
/// generation `horizon`.
///
/// Throws BadParameter (D == 0, horizon == 0, population overflow) or
/// BadProbability.
BranchingTrace sample_branching_generations(unsigned degree, double p, unsigned horizon,
                                            CounterStream& stream);

struct TailRow {
  unsigned generation = 0;
  std::uint64_t k = 0;
  double tail_birth = 0;      // empirical P(Y_n >= k)
  double se_birth = 0;
  double tail_branching = 0;  // empirical P(X_n >= k)
  double se_branching = 0;
  /// tail_birth <= tail_branching + 3 * sqrt(se_birth^2 + se_branching^2)
  bool dominated = true;

  double combined_se() const noexcept;
};

struct DominanceReport {
  std::size_t n_vertices = 0;
  unsigned degree = 0;
  double p = 0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  std::vector<TailRow> rows;  // sorted by (generation, k), k >= 1

  bool all_dominated() const noexcept;
};

/// Compares the per-generation tails of the birth process (fresh
/// configuration and uniform start per replicate) with those of independent
/// branching runs (same D and p, horizon N-1) for generations 0..N-1 and
/// k = 1..max observed value. Replicate r of each side draws from its own
/// counter stream, so the report does not depend on `workers`.
///
/// Throws BadParameter (replicates == 0, workers == 0) or BadProbability.
DominanceReport dominance_report(const Graph& graph, double p, std::size_t replicates,
                                 std::uint64_t seed, unsigned workers = 1);

}  // namespace bondperc
