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

#include <algorithm>
#include <array>
#include <charconv>
#include <numeric>
#include <string>

#include "bondperc/error.hpp"
#include "bondperc/graph.hpp"
#include "bondperc/random.hpp"

namespace bondperc {

namespace {

constexpr std::array<Edge, 6> kTetrahedron{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

constexpr std::array<Edge, 12> kCube{{
    {0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
    {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7},
}};

constexpr std::array<Edge, 12> kOctahedron{{
    {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
    {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5},
}};

constexpr std::array<Edge, 30> kDodecahedron{{
    {0, 1},   {0, 9},   {0, 10},  {1, 2},   {1, 11},  {2, 3},
    {2, 12},  {3, 4},   {3, 13},  {4, 5},   {4, 14},  {5, 6},
    {5, 15},  {6, 7},   {6, 16},  {7, 8},   {7, 17},  {8, 9},
    {8, 18},  {9, 19},  {10, 12}, {10, 18}, {11, 13}, {11, 19},
    {12, 14}, {13, 15}, {14, 16}, {15, 17}, {16, 18}, {17, 19},
}};

constexpr std::array<Edge, 30> kIcosahedron{{
    {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},   {1, 2},
    {1, 5},  {1, 6},  {1, 7},  {2, 3},  {2, 7},   {2, 8},
    {3, 4},  {3, 8},  {3, 9},  {4, 5},  {4, 9},   {4, 10},
    {5, 6},  {5, 10}, {6, 7},  {6, 10}, {6, 11},  {7, 8},
    {7, 11}, {8, 9},  {8, 11}, {9, 10}, {9, 11},  {10, 11},
}};

struct NamedKind {
  std::string_view name;
  BuiltinKind kind;
  bool parameterized;
};

constexpr std::array<NamedKind, 8> kNames{{
    {"tetrahedron", BuiltinKind::Tetrahedron, false},
    {"cube", BuiltinKind::Cube, false},
    {"octahedron", BuiltinKind::Octahedron, false},
    {"dodecahedron", BuiltinKind::Dodecahedron, false},
    {"icosahedron", BuiltinKind::Icosahedron, false},
    {"ring", BuiltinKind::Ring, true},
    {"complete", BuiltinKind::Complete, true},
    {"hypercube", BuiltinKind::Hypercube, true},
}};

unsigned parse_parameter(std::string_view text, std::string_view whole) {
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad graph parameter in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

BuiltinSpec parse_builtin(std::string_view name) {
  std::string_view base = name;
  std::string_view arg;
  if (const auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    arg = name.substr(colon + 1);
  } else if (const auto open = name.find('('); open != std::string_view::npos) {
    if (name.back() != ')') {
      throw Error(ErrorCode::ParseError, "unbalanced parenthesis in '" + std::string(name) + "'");
    }
    base = name.substr(0, open);
    arg = name.substr(open + 1, name.size() - open - 2);
  }
  for (const NamedKind& entry : kNames) {
    if (entry.name != base) continue;
    if (entry.parameterized == arg.empty()) {
      throw Error(ErrorCode::ParseError,
                  entry.parameterized
                      ? "graph '" + std::string(base) + "' needs a parameter, e.g. " +
                            std::string(base) + ":6"
                      : "graph '" + std::string(base) + "' takes no parameter");
    }
    return {entry.kind, entry.parameterized ? parse_parameter(arg, name) : 0u};
  }
  throw Error(ErrorCode::ParseError, "unknown graph '" + std::string(name) + "'");
}

std::string to_string(const BuiltinSpec& spec) {
  for (const NamedKind& entry : kNames) {
    if (entry.kind != spec.kind) continue;
    std::string out(entry.name);
    if (entry.parameterized) out += ":" + std::to_string(spec.parameter);
    return out;
  }
  return "unknown";
}

Graph tetrahedron() { return build_from_edge_list(4, kTetrahedron); }
Graph cube() { return build_from_edge_list(8, kCube); }
Graph octahedron() { return build_from_edge_list(6, kOctahedron); }
Graph dodecahedron() { return build_from_edge_list(20, kDodecahedron); }
Graph icosahedron() { return build_from_edge_list(12, kIcosahedron); }

Graph ring(unsigned n) {
  if (n < 3) throw Error(ErrorCode::BadParameter, "ring needs N >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, static_cast<Vertex>((i + 1) % n)});
  return build_from_edge_list(n, edges);
}

Graph complete(unsigned n) {
  if (n < 2) throw Error(ErrorCode::BadParameter, "complete graph needs N >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  return build_from_edge_list(n, edges);
}

Graph hypercube(unsigned d) {
  if (d < 1 || d > 24) throw Error(ErrorCode::BadParameter, "hypercube needs 1 <= d <= 24");
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (unsigned b = 0; b < d; ++b) {
      const Vertex w = v ^ (Vertex{1} << b);
      if (v < w) edges.push_back({v, w});
    }
  return build_from_edge_list(n, edges);
}

Graph generate_builtin(const BuiltinSpec& spec) {
  switch (spec.kind) {
    case BuiltinKind::Tetrahedron: return tetrahedron();
    case BuiltinKind::Cube: return cube();
    case BuiltinKind::Octahedron: return octahedron();
    case BuiltinKind::Dodecahedron: return dodecahedron();
    case BuiltinKind::Icosahedron: return icosahedron();
    case BuiltinKind::Ring: return ring(spec.parameter);
    case BuiltinKind::Complete: return complete(spec.parameter);
    case BuiltinKind::Hypercube: return hypercube(spec.parameter);
  }
  throw Error(ErrorCode::BadParameter, "unknown builtin graph");
}

Graph generate_random_regular(std::size_t n_vertices, unsigned degree, std::uint64_t seed,
                              unsigned max_attempts) {
  if (degree == 0 || degree >= n_vertices || (n_vertices * degree) % 2 != 0) {
    throw Error(ErrorCode::Infeasible, "no simple connected " + std::to_string(degree) +
                                           "-regular graph on " + std::to_string(n_vertices) +
                                           " vertices");
  }
  std::vector<Vertex> stubs(n_vertices * degree);
  std::vector<Edge> edges(stubs.size() / 2);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    CounterStream stream = CounterStream::for_replicate(seed, StreamDomain::GraphConstruction, attempt);
    for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<Vertex>(i / degree);
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      std::swap(stubs[i], stubs[stream.uniform_index(i + 1)]);
    }
    for (std::size_t k = 0; k < edges.size(); ++k) edges[k] = {stubs[2 * k], stubs[2 * k + 1]};
    try {
      return build_from_edge_list(n_vertices, edges);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSimple && e.code() != ErrorCode::NotConnected) throw;
    }
  }
  throw Error(ErrorCode::RetryLimit, "random regular graph construction failed after " +
                                         std::to_string(max_attempts) + " attempts");
}

}  // namespace bondperc
