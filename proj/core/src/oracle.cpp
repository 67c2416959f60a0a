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

#include "bondperc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <span>
#include <vector>

#include "bondperc/error.hpp"
#include "bondperc/percolation.hpp"
#include "parallel.hpp"

namespace bondperc {

namespace {

void require_enumerable(const Graph& graph, const EnumerationOptions& options) {
  if (graph.n_edges() > options.edge_cap || graph.n_edges() > 62) {
    throw Error(ErrorCode::TooManyEdges,
                "exact enumeration refused: graph has " + std::to_string(graph.n_edges()) +
                    " edges, above the cap of " + std::to_string(options.edge_cap) + " (set " +
                    kEdgeCapEnvVar + " to raise it)");
  }
}

// weights[m] = p^m (1-p)^(E-m)
std::vector<double> config_weights(std::size_t n_edges, double p) {
  std::vector<double> w(n_edges + 1);
  for (std::size_t m = 0; m <= n_edges; ++m) {
    w[m] = std::pow(p, static_cast<double>(m)) *
           std::pow(1.0 - p, static_cast<double>(n_edges - m));
  }
  return w;
}

// sum_m counts[m] * weights[m]
double weighted_sum(std::span<const std::uint64_t> counts, std::span<const double> weights) {
  double total = 0;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    total += static_cast<double>(counts[m]) * weights[m];
  }
  return total;
}

// Calls visit(mask, open_count) for every mask in [0, 2^E), Gray-code order.
template <typename Visit>
void for_each_gray_config(std::size_t n_edges, Visit&& visit) {
  const std::uint64_t total = std::uint64_t{1} << n_edges;
  std::uint64_t mask = 0;
  std::size_t open = 0;
  visit(mask, open);
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << std::countr_zero(i);
    mask ^= bit;
    if (mask & bit) {
      ++open;
    } else {
      --open;
    }
    visit(mask, open);
  }
}

// Component labels of the open subgraph by BFS.
void bfs_labels(const Graph& graph, std::uint64_t mask, std::vector<std::uint32_t>& label,
                std::vector<std::uint32_t>& sizes, std::vector<Vertex>& queue) {
  const std::size_t n = graph.n_vertices();
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  label.assign(n, kUnset);
  sizes.clear();
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(sizes.size());
    queue.assign(1, s);
    label[s] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      const auto nbrs = graph.neighbors(v);
      const auto ids = graph.incident_edges(v);
      for (std::size_t i = 0; i < nbrs.size(); ++i) {
        if (label[nbrs[i]] == kUnset && ((mask >> ids[i]) & 1)) {
          label[nbrs[i]] = id;
          queue.push_back(nbrs[i]);
        }
      }
    }
    sizes.push_back(static_cast<std::uint32_t>(queue.size()));
  }
}

}  // namespace

std::string to_decimal(uint128 value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::size_t edge_cap_from_environment() {
  const char* raw = std::getenv(kEdgeCapEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultEdgeCap;
  std::size_t cap = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, cap);
  if (ec != std::errc{} || ptr != end || cap < 1 || cap > 62) {
    throw Error(ErrorCode::BadParameter,
                std::string(kEdgeCapEnvVar) + " must be an integer in [1, 62], got '" + raw + "'");
  }
  return cap;
}

MomentPair exact_moments(const Graph& graph, double p, const EnumerationOptions& options) {
  require_probability(p);
  require_enumerable(graph, options);
  const auto weights = config_weights(graph.n_edges(), p);
  const auto edges = graph.edges();
  const std::size_t n = graph.n_vertices();

  DisjointSets sets(n);
  std::vector<std::uint32_t> size_of_root(n);
  double sum_s = 0, sum_s2 = 0;
  for_each_gray_config(graph.n_edges(), [&](std::uint64_t mask, std::size_t open) {
    sets.reset(n);
    for (EdgeId e = 0; e < edges.size(); ++e) {
      if ((mask >> e) & 1) sets.unite(edges[e].u, edges[e].v);
    }
    // Averaging S over start vertices: each component of size c contributes
    // c starts with S = c.
    double s = 0, s2 = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (sets.find(v) != v) continue;
      const double c = static_cast<double>(sets.set_size(v));
      s += c * c;
      s2 += c * c * c;
    }
    sum_s += weights[open] * s;
    sum_s2 += weights[open] * s2;
  });
  const double dn = static_cast<double>(n);
  return {sum_s / dn, sum_s2 / dn, MomentKind::Exact};
}

double MomentPolynomial::first_coefficient(std::size_t m) const {
  return static_cast<double>(first_sums.at(m)) / static_cast<double>(n_vertices);
}

double MomentPolynomial::second_coefficient(std::size_t m) const {
  return static_cast<double>(second_sums.at(m)) / static_cast<double>(n_vertices);
}

double MomentPolynomial::evaluate_first(double p) const {
  require_probability(p);
  const auto w = config_weights(n_edges, p);
  double sum = 0;
  for (std::size_t m = 0; m <= n_edges; ++m) sum += static_cast<double>(first_sums[m]) * w[m];
  return sum / static_cast<double>(n_vertices);
}

double MomentPolynomial::evaluate_second(double p) const {
  require_probability(p);
  const auto w = config_weights(n_edges, p);
  double sum = 0;
  for (std::size_t m = 0; m <= n_edges; ++m) sum += static_cast<double>(second_sums[m]) * w[m];
  return sum / static_cast<double>(n_vertices);
}

MomentPair MomentPolynomial::evaluate(double p) const {
  return {evaluate_first(p), evaluate_second(p), MomentKind::Exact};
}

MomentPolynomial moment_polynomial(const Graph& graph, const EnumerationOptions& options) {
  require_enumerable(graph, options);
  if (options.workers == 0) throw Error(ErrorCode::BadParameter, "workers must be >= 1");
  const std::size_t n_edges = graph.n_edges();
  const std::size_t n = graph.n_vertices();
  const auto edges = graph.edges();

  // Fixed partition of the mask range; chunk count independent of workers.
  const std::uint64_t total = std::uint64_t{1} << n_edges;
  const std::uint64_t n_chunks = std::min<std::uint64_t>(total, 256);
  const std::uint64_t chunk = total / n_chunks;

  struct Partial {
    std::vector<uint128> first, second;
  };
  std::vector<Partial> partials(n_chunks);

  detail::parallel_for(n_chunks, options.workers, [&](unsigned, std::size_t c) {
    Partial& part = partials[c];
    part.first.assign(n_edges + 1, 0);
    part.second.assign(n_edges + 1, 0);
    DisjointSets sets(n);
    for (std::uint64_t mask = c * chunk; mask < (c + 1) * chunk; ++mask) {
      sets.reset(n);
      for (EdgeId e = 0; e < n_edges; ++e) {
        if ((mask >> e) & 1) sets.unite(edges[e].u, edges[e].v);
      }
      std::uint64_t s = 0, s2 = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (sets.find(v) != v) continue;
        const std::uint64_t size = sets.set_size(v);
        s += size * size;
        s2 += size * size * size;
      }
      const auto open = static_cast<std::size_t>(std::popcount(mask));
      part.first[open] += s;
      part.second[open] += s2;
    }
  });

  MomentPolynomial poly;
  poly.n_vertices = n;
  poly.n_edges = n_edges;
  poly.first_sums.assign(n_edges + 1, 0);
  poly.second_sums.assign(n_edges + 1, 0);
  for (const Partial& part : partials) {
    for (std::size_t m = 0; m <= n_edges; ++m) {
      poly.first_sums[m] += part.first[m];
      poly.second_sums[m] += part.second[m];
    }
  }
  return poly;
}

ConnectivityTable connectivity_table(const Graph& graph, double p,
                                     const EnumerationOptions& options) {
  require_probability(p);
  require_enumerable(graph, options);
  const std::size_t n = graph.n_vertices();
  const std::size_t levels = graph.n_edges() + 1;
  const auto weights = config_weights(graph.n_edges(), p);

  // counts[(x * n + y) * levels + m]: configurations with m open edges joining x and y
  std::vector<std::uint64_t> counts(n * n * levels, 0);
  std::vector<std::uint32_t> label, sizes;
  std::vector<Vertex> queue;
  for_each_gray_config(graph.n_edges(), [&](std::uint64_t mask, std::size_t open) {
    bfs_labels(graph, mask, label, sizes, queue);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (label[x] == label[y]) ++counts[(x * n + y) * levels + open];
  });

  ConnectivityTable table;
  table.n_vertices = n;
  table.pair_probs.resize(n * n);
  for (std::size_t xy = 0; xy < n * n; ++xy) {
    table.pair_probs[xy] = weighted_sum({counts.data() + xy * levels, levels}, weights);
  }
  return table;
}

MomentPair connectivity_moments(const Graph& graph, double p, const EnumerationOptions& options) {
  const ConnectivityTable table = connectivity_table(graph, p, options);
  const std::size_t n = graph.n_vertices();
  double first = 0;
  for (double prob : table.pair_probs) first += prob;

  // sum_{x,y,z} P(x <-> y, x <-> z): for each configuration count the
  // (x, y, z) triples within one component as sum_{x,y same} |comp(x)|.
  std::vector<std::uint64_t> triples(graph.n_edges() + 1, 0);
  std::vector<std::uint32_t> label, sizes;
  std::vector<Vertex> queue;
  for_each_gray_config(graph.n_edges(), [&](std::uint64_t mask, std::size_t open) {
    bfs_labels(graph, mask, label, sizes, queue);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (label[x] == label[y]) triples[open] += sizes[label[x]];
  });
  const double dn = static_cast<double>(n);
  const double second = weighted_sum(triples, config_weights(graph.n_edges(), p));
  return {first / dn, second / dn, MomentKind::Exact};
}

double isolation_probability(const Graph& graph, double p, Vertex y,
                             const EnumerationOptions& options) {
  require_probability(p);
  require_enumerable(graph, options);
  if (y >= graph.n_vertices()) throw Error(ErrorCode::BadIndex, "vertex out of range");
  std::uint64_t incident = 0;
  for (EdgeId e : graph.incident_edges(y)) incident |= std::uint64_t{1} << e;
  std::vector<std::uint64_t> counts(graph.n_edges() + 1, 0);
  for_each_gray_config(graph.n_edges(), [&](std::uint64_t mask, std::size_t open) {
    if ((mask & incident) == 0) ++counts[open];
  });
  return weighted_sum(counts, config_weights(graph.n_edges(), p));
}

}  // namespace bondperc
