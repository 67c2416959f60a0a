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
#include <span>
#include <vector>

#include "bondperc/graph.hpp"
#include "bondperc/random.hpp"

namespace bondperc {

/// One bond-percolation realization: open/closed state per edge index.
class EdgeConfig {
 public:
  EdgeConfig(std::vector<std::uint8_t> open_flags, double p);

  static EdgeConfig all_closed(std::size_t n_edges) { return {std::vector<std::uint8_t>(n_edges, 0), 0.0}; }
  static EdgeConfig all_open(std::size_t n_edges) { return {std::vector<std::uint8_t>(n_edges, 1), 1.0}; }

  bool is_open(EdgeId e) const { return open_[e] != 0; }
  std::size_t size() const noexcept { return open_.size(); }
  std::size_t n_open() const noexcept;
  /// Probability the configuration was drawn at (metadata only).
  double p() const noexcept { return p_; }
  std::span<const std::uint8_t> flags() const noexcept { return open_; }

  /// True if every edge open here is also open in `other`.
  bool is_subset_of(const EdgeConfig& other) const;

  bool operator==(const EdgeConfig&) const = default;

 private:
  std::vector<std::uint8_t> open_;
  double p_;
};

struct ClusterResult {
  Vertex start_vertex = 0;
  std::vector<Vertex> members;  // sorted ascending
  std::size_t size = 0;
};

/// Union by size with path halving. Reusable across realizations via reset().
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n = 0) { reset(n); }

  void reset(std::size_t n);
  Vertex find(Vertex v) noexcept;
  void unite(Vertex a, Vertex b) noexcept;
  std::size_t set_size(Vertex v) noexcept { return size_[find(v)]; }
  std::size_t element_count() const noexcept { return parent_.size(); }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::uint32_t> size_;
};

/// One uniform draw per edge, in edge-index order. Thresholding the same
/// draws at several p (open iff u < p) couples the configurations.
std::vector<double> draw_edge_uniforms(const Graph& graph, CounterStream& stream);
EdgeConfig threshold_config(std::span<const double> uniforms, double p);

/// Each edge open independently with probability p. Throws BadProbability.
EdgeConfig sample_config(const Graph& graph, double p, CounterStream& stream);

enum class ClusterMethod { UnionFind, Bfs };

/// Open cluster of x. Throws BadIndex for an invalid x or BadParameter if
/// the configuration length differs from |E|.
ClusterResult cluster_of(const Graph& graph, const EdgeConfig& config, Vertex x,
                         ClusterMethod method = ClusterMethod::UnionFind);

/// One replicate of S: x uniform over vertices (drawn first), then a fresh
/// configuration from the same stream.
ClusterResult sample_realization(const Graph& graph, double p, CounterStream& stream);

/// Same draws and result size as sample_realization without materializing
/// the configuration or member list. `workspace` is scratch space.
std::size_t sample_cluster_size(const Graph& graph, double p, CounterStream& stream,
                                DisjointSets& workspace);

}  // namespace bondperc
