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

#include "bondperc/graph.hpp"

#include <algorithm>
#include <string>

#include "bondperc/error.hpp"

namespace bondperc {

namespace {

bool is_connected(std::size_t n, std::span<const Vertex> neighbors, unsigned degree) {
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t i = 0; i < degree; ++i) {
      const Vertex w = neighbors[std::size_t{v} * degree + i];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

Graph build_from_edge_list(std::size_t n_vertices, std::span<const Edge> edges) {
  if (edges.empty()) {
    throw Error(ErrorCode::BadParameter, "edge list is empty");
  }
  if (n_vertices > std::size_t{0xFFFFFFFFu}) {
    throw Error(ErrorCode::BadParameter, "too many vertices");
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n_vertices || e.v >= n_vertices) {
      throw Error(ErrorCode::BadIndex, "edge (" + std::to_string(e.u) + ", " +
                                           std::to_string(e.v) + ") has a vertex outside [0, " +
                                           std::to_string(n_vertices) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(normalized.begin(), normalized.end());
  if (auto dup = std::adjacent_find(normalized.begin(), normalized.end());
      dup != normalized.end()) {
    throw Error(ErrorCode::NotSimple, "duplicate edge (" + std::to_string(dup->u) + ", " +
                                          std::to_string(dup->v) + ")");
  }

  std::vector<unsigned> deg(n_vertices, 0);
  for (const Edge& e : normalized) {
    ++deg[e.u];
    ++deg[e.v];
  }
  const unsigned degree = deg[0];
  for (std::size_t v = 0; v < n_vertices; ++v) {
    if (deg[v] != degree) {
      throw Error(ErrorCode::NotRegular,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(deg[v]) +
                      " but vertex 0 has degree " + std::to_string(degree));
    }
  }
  if (degree == 0) {
    throw Error(ErrorCode::NotConnected, "graph has isolated vertices");
  }

  Graph g;
  g.n_vertices_ = n_vertices;
  g.degree_ = degree;
  g.neighbors_.assign(n_vertices * degree, 0);
  g.incident_.assign(n_vertices * degree, 0);

  // Edges are sorted, so filling rows in edge order leaves each row sorted
  // for the lower endpoint; the upper endpoint rows are sorted afterwards.
  std::vector<unsigned> fill(n_vertices, 0);
  for (EdgeId id = 0; id < normalized.size(); ++id) {
    const Edge& e = normalized[id];
    for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      const std::size_t slot = std::size_t{a} * degree + fill[a]++;
      g.neighbors_[slot] = b;
      g.incident_[slot] = id;
    }
  }
  std::vector<std::pair<Vertex, EdgeId>> row(degree);
  for (std::size_t v = 0; v < n_vertices; ++v) {
    const std::size_t base = v * degree;
    for (unsigned i = 0; i < degree; ++i) row[i] = {g.neighbors_[base + i], g.incident_[base + i]};
    std::sort(row.begin(), row.end());
    for (unsigned i = 0; i < degree; ++i) {
      g.neighbors_[base + i] = row[i].first;
      g.incident_[base + i] = row[i].second;
    }
  }
  g.edges_ = std::move(normalized);

  if (!is_connected(n_vertices, g.neighbors_, degree)) {
    throw Error(ErrorCode::NotConnected, "graph is not connected");
  }
  return g;
}

}  // namespace bondperc
