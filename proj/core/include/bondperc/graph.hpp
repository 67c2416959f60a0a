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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bondperc {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge. Edges stored in a Graph are normalized so u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple connected D-regular graph.
///
/// Edges are normalized to (min, max), sorted lexicographically, and indexed
/// 0..|E|-1 in that order. Each vertex's neighbors are sorted ascending and
/// `incident_edges(v)[i]` is the id of the edge to `neighbors(v)[i]`.
class Graph {
 public:
  std::size_t n_vertices() const noexcept { return n_vertices_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t n_edges() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + std::size_t{v} * degree_, degree_};
  }
  std::span<const EdgeId> incident_edges(Vertex v) const noexcept {
    return {incident_.data() + std::size_t{v} * degree_, degree_};
  }

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_from_edge_list(std::size_t, std::span<const Edge>);

  Graph() = default;

  std::size_t n_vertices_ = 0;
  unsigned degree_ = 0;
  std::vector<Edge> edges_;
  std::vector<Vertex> neighbors_;  // row v occupies [v*D, (v+1)*D)
  std::vector<EdgeId> incident_;
};

/// Validates and canonicalizes an edge list.
/// Throws BadIndex, NotSimple, NotRegular or NotConnected (checked in that
/// order); BadParameter for an empty edge list.
Graph build_from_edge_list(std::size_t n_vertices, std::span<const Edge> edges);

// ---------------------------------------------------------------------------
// Named graphs.
//
// Platonic solid labelings (fixed; used for goldens and reproducible seeds):
//   tetrahedron   K4 on {0,1,2,3}.
//   cube          vertices are 3-bit words; u ~ v iff they differ in one bit.
//   octahedron    K6 minus the matching {0-1, 2-3, 4-5}; i is opposite i^1.
//   dodecahedron  generalized Petersen graph GP(10,2): outer 10-cycle 0..9,
//                 spokes i ~ 10+i, inner star 10+i ~ 10+(i+2)%10.
//   icosahedron   apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11;
//                 upper i ~ lower 5+i and 5+(i%5)+1.
// ---------------------------------------------------------------------------

enum class BuiltinKind {
  Tetrahedron,
  Cube,
  Octahedron,
  Dodecahedron,
  Icosahedron,
  Ring,
  Complete,
  Hypercube,
};

struct BuiltinSpec {
  BuiltinKind kind = BuiltinKind::Tetrahedron;
  unsigned parameter = 0;  // N for ring/complete, d for hypercube

  bool operator==(const BuiltinSpec&) const = default;
};

/// Parses "cube", "ring:7", "ring(7)", "complete:5", "hypercube:4", ...
/// Throws ParseError on unknown names or malformed parameters.
BuiltinSpec parse_builtin(std::string_view name);
std::string to_string(const BuiltinSpec& spec);

/// Throws BadParameter for ring N < 3, complete N < 2, hypercube d < 1 (or
/// too large to index).
Graph generate_builtin(const BuiltinSpec& spec);

Graph tetrahedron();
Graph cube();
Graph octahedron();
Graph dodecahedron();
Graph icosahedron();
Graph ring(unsigned n);
Graph complete(unsigned n);
Graph hypercube(unsigned d);

/// Random simple connected D-regular graph by the pairing (configuration)
/// model: shuffle N*D half-edges, pair consecutive ones, reject on a loop,
/// a multi-edge or a disconnected result. Attempt k uses its own stream, so
/// the result depends only on (N, D, seed).
///
/// Throws Infeasible if N*D is odd or D >= N (or D == 0), RetryLimit after
/// `max_attempts` rejections.
Graph generate_random_regular(std::size_t n_vertices, unsigned degree,
                              std::uint64_t seed, unsigned max_attempts = 10000);

// Edge-list text format: first non-comment line "N D", then one "u v" per
// line (0-based). Lines whose first non-blank character is '#' are ignored.

/// Throws ParseError on malformed input or a header/degree mismatch, plus
/// the build_from_edge_list errors.
Graph read_edge_list(std::istream& in);
Graph load_edge_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& graph);

}  // namespace bondperc
