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

#include "bondperc/percolation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "bondperc/error.hpp"

namespace bondperc {

namespace {

void require_vertex(const Graph& graph, Vertex x) {
  if (x >= graph.n_vertices()) {
    throw Error(ErrorCode::BadIndex, "vertex " + std::to_string(x) + " outside [0, " +
                                         std::to_string(graph.n_vertices()) + ")");
  }
}

void require_matching(const Graph& graph, const EdgeConfig& config) {
  if (config.size() != graph.n_edges()) {
    throw Error(ErrorCode::BadParameter, "configuration has " + std::to_string(config.size()) +
                                             " edges, graph has " +
                                             std::to_string(graph.n_edges()));
  }
}

std::vector<Vertex> members_by_bfs(const Graph& graph, const EdgeConfig& config, Vertex x) {
  std::vector<char> seen(graph.n_vertices(), 0);
  std::vector<Vertex> members{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    const Vertex v = members[head];
    const auto nbrs = graph.neighbors(v);
    const auto ids = graph.incident_edges(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      if (!seen[nbrs[i]] && config.is_open(ids[i])) {
        seen[nbrs[i]] = 1;
        members.push_back(nbrs[i]);
      }
    }
  }
  return members;
}

std::vector<Vertex> members_by_union_find(const Graph& graph, const EdgeConfig& config,
                                          Vertex x) {
  DisjointSets sets(graph.n_vertices());
  const auto edges = graph.edges();
  for (EdgeId e = 0; e < edges.size(); ++e) {
    if (config.is_open(e)) sets.unite(edges[e].u, edges[e].v);
  }
  const Vertex root = sets.find(x);
  std::vector<Vertex> members;
  for (Vertex v = 0; v < graph.n_vertices(); ++v) {
    if (sets.find(v) == root) members.push_back(v);
  }
  return members;
}

}  // namespace

EdgeConfig::EdgeConfig(std::vector<std::uint8_t> open_flags, double p)
    : open_(std::move(open_flags)), p_(p) {
  require_probability(p);
}

std::size_t EdgeConfig::n_open() const noexcept {
  return static_cast<std::size_t>(std::count_if(open_.begin(), open_.end(),
                                                [](std::uint8_t f) { return f != 0; }));
}

bool EdgeConfig::is_subset_of(const EdgeConfig& other) const {
  if (other.size() != size()) return false;
  for (std::size_t i = 0; i < open_.size(); ++i) {
    if (open_[i] && !other.open_[i]) return false;
  }
  return true;
}

void DisjointSets::reset(std::size_t n) {
  parent_.resize(n);
  size_.assign(n, 1);
  std::iota(parent_.begin(), parent_.end(), Vertex{0});
}

Vertex DisjointSets::find(Vertex v) noexcept {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

void DisjointSets::unite(Vertex a, Vertex b) noexcept {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
}

std::vector<double> draw_edge_uniforms(const Graph& graph, CounterStream& stream) {
  std::vector<double> u(graph.n_edges());
  for (double& value : u) value = stream.uniform();
  return u;
}

EdgeConfig threshold_config(std::span<const double> uniforms, double p) {
  require_probability(p);
  std::vector<std::uint8_t> open(uniforms.size());
  for (std::size_t i = 0; i < uniforms.size(); ++i) open[i] = uniforms[i] < p ? 1 : 0;
  return {std::move(open), p};
}

EdgeConfig sample_config(const Graph& graph, double p, CounterStream& stream) {
  require_probability(p);
  return threshold_config(draw_edge_uniforms(graph, stream), p);
}

ClusterResult cluster_of(const Graph& graph, const EdgeConfig& config, Vertex x,
                         ClusterMethod method) {
  require_vertex(graph, x);
  require_matching(graph, config);
  ClusterResult result;
  result.start_vertex = x;
  result.members = method == ClusterMethod::Bfs ? members_by_bfs(graph, config, x)
                                                : members_by_union_find(graph, config, x);
  std::sort(result.members.begin(), result.members.end());
  result.size = result.members.size();
  return result;
}

ClusterResult sample_realization(const Graph& graph, double p, CounterStream& stream) {
  require_probability(p);
  const auto x = static_cast<Vertex>(stream.uniform_index(graph.n_vertices()));
  const EdgeConfig config = sample_config(graph, p, stream);
  return cluster_of(graph, config, x);
}

std::size_t sample_cluster_size(const Graph& graph, double p, CounterStream& stream,
                                DisjointSets& workspace) {
  require_probability(p);
  const auto x = static_cast<Vertex>(stream.uniform_index(graph.n_vertices()));
  workspace.reset(graph.n_vertices());
  for (const Edge& e : graph.edges()) {
    if (stream.uniform() < p) workspace.unite(e.u, e.v);
  }
  return workspace.set_size(x);
}

}  // namespace bondperc
