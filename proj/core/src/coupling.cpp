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

#include "bondperc/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "bondperc/error.hpp"
#include "parallel.hpp"

namespace bondperc {

std::size_t GenerationTrace::total() const noexcept {
  std::size_t sum = 0;
  for (std::size_t c : counts) sum += c;
  return sum;
}

GenerationTrace run_birth_process(const Graph& graph, const EdgeConfig& config, Vertex x,
                                  const ParticleOrder& reorder) {
  if (x >= graph.n_vertices()) {
    throw Error(ErrorCode::BadIndex, "start vertex " + std::to_string(x) + " out of range");
  }
  if (config.size() != graph.n_edges()) {
    throw Error(ErrorCode::BadParameter, "configuration length does not match the graph");
  }
  const std::size_t n = graph.n_vertices();
  GenerationTrace trace;
  trace.layers.resize(n);
  trace.counts.assign(n, 0);
  trace.per_particle_offspring.resize(n);

  std::vector<char> occupied(n, 0);
  occupied[x] = 1;
  trace.layers[0] = {x};

  // A vertex at open-path distance n satisfies n <= N-1, so N layers suffice.
  for (std::size_t gen = 0; gen < n; ++gen) {
    auto& layer = trace.layers[gen];
    if (layer.empty()) break;
    if (reorder) reorder(layer);
    trace.counts[gen] = layer.size();
    auto& offspring = trace.per_particle_offspring[gen];
    offspring.assign(layer.size(), 0);
    for (std::size_t i = 0; i < layer.size(); ++i) {
      const Vertex parent = layer[i];
      const auto nbrs = graph.neighbors(parent);
      const auto ids = graph.incident_edges(parent);
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        if (occupied[nbrs[j]] || !config.is_open(ids[j])) continue;
        occupied[nbrs[j]] = 1;
        ++offspring[i];
        // gen + 1 < n whenever a birth happens: at most N vertices are occupied.
        trace.layers[gen + 1].push_back(nbrs[j]);
      }
    }
  }
  return trace;
}

std::uint32_t sample_binomial(std::uint32_t n, double p, CounterStream& stream) {
  require_probability(p);
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  if (p > 0.5) return n - sample_binomial(n, 1.0 - p, stream);

  const double u = stream.uniform();
  const double q = 1.0 - p;
  const double ratio = p / q;
  double pmf = std::pow(q, static_cast<double>(n));
  double cdf = pmf;
  std::uint32_t k = 0;
  while (u >= cdf && k < n) {
    pmf *= ratio * static_cast<double>(n - k) / static_cast<double>(k + 1);
    ++k;
    cdf += pmf;
  }
  return k;
}

BranchingTrace sample_branching_generations(unsigned degree, double p, unsigned horizon,
                                            CounterStream& stream) {
  require_probability(p);
  if (degree == 0) throw Error(ErrorCode::BadParameter, "degree must be >= 1");
  if (horizon == 0) throw Error(ErrorCode::BadParameter, "horizon must be >= 1");
  constexpr std::uint64_t kPopulationLimit = std::uint64_t{1} << 40;

  BranchingTrace trace;
  trace.generation_sizes.assign(std::size_t{horizon} + 1, 0);
  trace.generation_sizes[0] = 1;
  trace.generation_sizes[1] = sample_binomial(degree, p, stream);
  for (unsigned gen = 1; gen < horizon; ++gen) {
    const std::uint64_t parents = trace.generation_sizes[gen];
    if (parents == 0) break;
    if (parents > kPopulationLimit / std::max(1u, degree)) {
      throw Error(ErrorCode::BadParameter, "branching population exceeds 2^40 individuals");
    }
    std::uint64_t children = 0;
    for (std::uint64_t i = 0; i < parents; ++i) children += sample_binomial(degree - 1, p, stream);
    trace.generation_sizes[gen + 1] = children;
  }
  for (std::uint64_t size : trace.generation_sizes) trace.total += size;
  return trace;
}

double TailRow::combined_se() const noexcept {
  return std::sqrt(se_birth * se_birth + se_branching * se_branching);
}

bool DominanceReport::all_dominated() const noexcept {
  return std::all_of(rows.begin(), rows.end(), [](const TailRow& r) { return r.dominated; });
}

namespace {

using Histogram = std::map<std::uint64_t, std::uint64_t>;  // value -> frequency

struct SideHistograms {
  std::vector<Histogram> birth;
  std::vector<Histogram> branching;
};

double proportion_se(double fraction, std::size_t replicates) {
  return std::sqrt(fraction * (1.0 - fraction) / static_cast<double>(replicates));
}

std::vector<std::uint64_t> tail_counts(const Histogram& hist, std::uint64_t max_k) {
  // tail[k] = #{replicates with value >= k}, k = 0..max_k
  std::vector<std::uint64_t> tail(max_k + 2, 0);
  for (const auto& [value, freq] : hist) tail[std::min(value, max_k + 1)] += freq;
  for (std::size_t k = tail.size() - 1; k-- > 0;) tail[k] += tail[k + 1];
  return tail;
}

}  // namespace

DominanceReport dominance_report(const Graph& graph, double p, std::size_t replicates,
                                 std::uint64_t seed, unsigned workers) {
  require_probability(p);
  if (replicates == 0) throw Error(ErrorCode::BadParameter, "replicates must be >= 1");
  if (workers == 0) throw Error(ErrorCode::BadParameter, "workers must be >= 1");

  const std::size_t n = graph.n_vertices();
  const unsigned horizon = static_cast<unsigned>(n - 1);
  constexpr std::size_t kBlock = 1024;
  const std::size_t n_blocks = (replicates + kBlock - 1) / kBlock;

  std::vector<SideHistograms> per_worker(std::max(1u, workers));
  for (auto& h : per_worker) {
    h.birth.resize(n);
    h.branching.resize(n);
  }

  detail::parallel_for(n_blocks, workers, [&](unsigned worker, std::size_t block) {
    auto& hist = per_worker[worker];
    const std::size_t end = std::min(replicates, (block + 1) * kBlock);
    for (std::size_t r = block * kBlock; r < end; ++r) {
      CounterStream perc = CounterStream::for_replicate(seed, StreamDomain::Percolation, r);
      const auto x = static_cast<Vertex>(perc.uniform_index(n));
      const EdgeConfig config = sample_config(graph, p, perc);
      const GenerationTrace birth = run_birth_process(graph, config, x);
      for (std::size_t gen = 0; gen < n; ++gen) ++hist.birth[gen][birth.counts[gen]];

      CounterStream branch = CounterStream::for_replicate(seed, StreamDomain::Branching, r);
      const BranchingTrace tree = sample_branching_generations(graph.degree(), p, horizon, branch);
      for (std::size_t gen = 0; gen < n; ++gen) ++hist.branching[gen][tree.generation_sizes[gen]];
    }
  });

  SideHistograms merged;
  merged.birth.resize(n);
  merged.branching.resize(n);
  for (const auto& h : per_worker) {
    for (std::size_t gen = 0; gen < n; ++gen) {
      for (const auto& [v, f] : h.birth[gen]) merged.birth[gen][v] += f;
      for (const auto& [v, f] : h.branching[gen]) merged.branching[gen][v] += f;
    }
  }

  DominanceReport report;
  report.n_vertices = n;
  report.degree = graph.degree();
  report.p = p;
  report.replicates = replicates;
  report.seed = seed;
  const auto reps = static_cast<double>(replicates);
  for (std::size_t gen = 0; gen < n; ++gen) {
    const std::uint64_t max_k = std::max(merged.birth[gen].rbegin()->first,
                                         merged.branching[gen].rbegin()->first);
    const auto tail_y = tail_counts(merged.birth[gen], max_k);
    const auto tail_x = tail_counts(merged.branching[gen], max_k);
    for (std::uint64_t k = 1; k <= max_k; ++k) {
      TailRow row;
      row.generation = static_cast<unsigned>(gen);
      row.k = k;
      row.tail_birth = static_cast<double>(tail_y[k]) / reps;
      row.tail_branching = static_cast<double>(tail_x[k]) / reps;
      row.se_birth = proportion_se(row.tail_birth, replicates);
      row.se_branching = proportion_se(row.tail_branching, replicates);
      row.dominated = row.tail_birth <= row.tail_branching + 3.0 * row.combined_se();
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace bondperc
