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
#include <string>
#include <vector>

#include "bondperc/bounds.hpp"
#include "bondperc/graph.hpp"

namespace bondperc {

__extension__ using uint128 = unsigned __int128;

/// Decimal representation of a 128-bit unsigned integer.
std::string to_decimal(uint128 value);

/// Default maximum |E| for exhaustive enumeration (2^24 configurations).
inline constexpr std::size_t kDefaultEdgeCap = 24;

/// Name of the environment variable that overrides the edge cap.
inline constexpr const char* kEdgeCapEnvVar = "BONDPERC_ORACLE_EDGE_CAP";

/// kDefaultEdgeCap unless the environment variable holds a valid integer in
/// [1, 62]. Throws BadParameter on a malformed value.
std::size_t edge_cap_from_environment();

struct EnumerationOptions {
  std::size_t edge_cap = kDefaultEdgeCap;
  unsigned workers = 1;
};

/// Exact E(S), E(S^2) (uniform start vertex) by iterating over all 2^|E|
/// configurations in Gray-code order and weighting each by
/// p^open (1-p)^closed. Throws TooManyEdges or BadProbability.
MomentPair exact_moments(const Graph& graph, double p, const EnumerationOptions& options = {});

/// E(S)(p) = sum_m (first_sums[m] / N) p^m (1-p)^{|E|-m}, where first_sums[m]
/// is the sum over configurations with m open edges and over start vertices
/// of S; likewise second_sums with S^2.
struct MomentPolynomial {
  std::size_t n_vertices = 0;  // coefficient denominator
  std::size_t n_edges = 0;
  std::vector<uint128> first_sums;
  std::vector<uint128> second_sums;

  double first_coefficient(std::size_t m) const;
  double second_coefficient(std::size_t m) const;
  double evaluate_first(double p) const;
  double evaluate_second(double p) const;
  MomentPair evaluate(double p) const;
};

/// Single enumeration pass; partitions the configuration range over
/// `options.workers` threads and merges the integer accumulators, so the
/// result is independent of the worker count. Throws TooManyEdges.
MomentPolynomial moment_polynomial(const Graph& graph, const EnumerationOptions& options = {});

/// Pairwise connection probabilities P(x <-> y), row-major N x N.
struct ConnectivityTable {
  std::size_t n_vertices = 0;
  std::vector<double> pair_probs;

  double at(Vertex x, Vertex y) const { return pair_probs[std::size_t{x} * n_vertices + y]; }
};

ConnectivityTable connectivity_table(const Graph& graph, double p,
                                     const EnumerationOptions& options = {});

/// E(S) = (1/N) sum_x sum_y P(x <-> y) and
/// E(S^2) = (1/N) sum_x sum_{y,z} P(x <-> y, x <-> z), both by enumeration
/// with BFS component labels. Independent of the exact_moments code path.
MomentPair connectivity_moments(const Graph& graph, double p,
                                const EnumerationOptions& options = {});

/// P(every edge incident to y is closed), by enumeration.
double isolation_probability(const Graph& graph, double p, Vertex y,
                             const EnumerationOptions& options = {});

}  // namespace bondperc
