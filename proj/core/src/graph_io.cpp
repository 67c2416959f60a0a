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

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bondperc/error.hpp"
#include "bondperc/graph.hpp"

namespace bondperc {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw Error(ErrorCode::ParseError, "edge list line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw Error(ErrorCode::ParseError, "edge list is empty");
  }
  long long n = 0, d = 0;
  {
    std::istringstream header(line);
    std::string rest;
    if (!(header >> n >> d) || (header >> rest) || n <= 0 || d <= 0) {
      fail(line_no, "expected header \"N D\" with positive integers");
    }
  }
  std::vector<Edge> edges;
  while (next_content_line(in, line, line_no)) {
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) fail(line_no, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::BadIndex, "edge list line " + std::to_string(line_no) +
                                           ": vertex index out of range [0, " +
                                           std::to_string(n) + ")");
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  Graph g = build_from_edge_list(static_cast<std::size_t>(n), edges);
  if (g.degree() != static_cast<unsigned long long>(d)) {
    throw Error(ErrorCode::ParseError, "header declares degree " + std::to_string(d) +
                                           " but the edges give degree " +
                                           std::to_string(g.degree()));
  }
  return g;
}

Graph load_edge_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open edge file '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& graph) {
  out << graph.n_vertices() << ' ' << graph.degree() << '\n';
  for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace bondperc
