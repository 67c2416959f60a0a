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

#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "bondperc/bondperc.hpp"

namespace bondperc::cli {

namespace {

using nlohmann::json;

constexpr std::string_view kUsageTail =
    "Graphs: tetrahedron, cube, octahedron, dodecahedron, icosahedron, ring:N, complete:N,\n"
    "        hypercube:d, or --edge-file with lines \"N D\" then \"u v\" (0-based, '#' comments).\n"
    "Exit status: 0 success, 1 computation error, 2 refused precondition.\n";

double parse_double(std::string_view text) {
  double value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::UsageError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

// 17 significant digits round-trip any double.
std::string format_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

struct MomentRow {
  double p = 0;
  std::optional<MomentEstimate> estimate;
  MomentPair thm1, thm2, best;
  std::optional<MomentPair> exact;
};

struct Context {
  const CommandRequest& request;
  std::string label;
  Graph graph;
};

Graph resolve_graph(const CommandRequest& request) {
  if (request.edge_file) return load_edge_file(*request.edge_file);
  return generate_builtin(parse_builtin(*request.graph_name));
}

MomentRow bounds_row(const Graph& graph, double p) {
  const BoundParams params = BoundParams::for_graph(graph, p);
  MomentRow row;
  row.p = p;
  row.thm1 = branching_bounds(params);
  row.thm2 = isolation_bounds(params);
  row.best = combined_bounds(params);
  return row;
}

void write_moment_rows(const Context& ctx, const std::vector<MomentRow>& rows, std::ostream& out) {
  const auto n = ctx.graph.n_vertices();
  const auto d = ctx.graph.degree();
  if (ctx.request.format == OutputFormat::Csv) {
    out << kMomentCsvHeader << '\n';
    for (const MomentRow& row : rows) {
      out << csv_field(ctx.label) << ',' << n << ',' << d << ',' << format_double(row.p) << ',';
      if (row.estimate) {
        const MomentEstimate& e = *row.estimate;
        out << e.replicates << ',' << e.seed << ',' << format_double(e.mean_s) << ','
            << format_double(e.se_s) << ',' << format_double(e.mean_s2) << ','
            << format_double(e.se_s2) << ',';
      } else {
        out << ",,,,,,";
      }
      out << format_double(row.thm1.first) << ',' << format_double(row.thm1.second) << ','
          << format_double(row.thm2.first) << ',' << format_double(row.thm2.second) << ','
          << format_double(row.best.first) << ',' << format_double(row.best.second) << ',';
      if (row.exact) {
        out << format_double(row.exact->first) << ',' << format_double(row.exact->second);
      } else {
        out << ',';
      }
      out << '\n';
    }
    return;
  }

  json doc;
  doc["command"] = to_string(ctx.request.subcommand);
  doc["graph"] = ctx.label;
  doc["N"] = n;
  doc["D"] = d;
  doc["rows"] = json::array();
  for (const MomentRow& row : rows) {
    json r;
    r["graph"] = ctx.label;
    r["N"] = n;
    r["D"] = d;
    r["p"] = row.p;
    const auto& e = row.estimate;
    r["reps"] = e ? json(e->replicates) : json(nullptr);
    r["seed"] = e ? json(e->seed) : json(nullptr);
    r["mean_s"] = e ? json(e->mean_s) : json(nullptr);
    r["se_s"] = e ? json(e->se_s) : json(nullptr);
    r["mean_s2"] = e ? json(e->mean_s2) : json(nullptr);
    r["se_s2"] = e ? json(e->se_s2) : json(nullptr);
    r["thm1_first"] = row.thm1.first;
    r["thm1_second"] = row.thm1.second;
    r["thm2_first"] = row.thm2.first;
    r["thm2_second"] = row.thm2.second;
    r["best_first"] = row.best.first;
    r["best_second"] = row.best.second;
    r["exact_first"] = row.exact ? json(row.exact->first) : json(nullptr);
    r["exact_second"] = row.exact ? json(row.exact->second) : json(nullptr);
    doc["rows"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

void write_polynomial(const Context& ctx, const MomentPolynomial& poly, std::ostream& out) {
  if (ctx.request.format == OutputFormat::Csv) {
    out << "m,first_sum,second_sum,denominator\n";
    for (std::size_t m = 0; m <= poly.n_edges; ++m) {
      out << m << ',' << to_decimal(poly.first_sums[m]) << ',' << to_decimal(poly.second_sums[m])
          << ',' << poly.n_vertices << '\n';
    }
    return;
  }
  // Exact integers as strings: coefficient c_m = numerator[m] / denominator.
  json doc;
  doc["command"] = "oracle";
  doc["graph"] = ctx.label;
  doc["N"] = ctx.graph.n_vertices();
  doc["D"] = ctx.graph.degree();
  doc["n_edges"] = poly.n_edges;
  doc["denominator"] = std::to_string(poly.n_vertices);
  doc["first_numerators"] = json::array();
  doc["second_numerators"] = json::array();
  for (std::size_t m = 0; m <= poly.n_edges; ++m) {
    doc["first_numerators"].push_back(to_decimal(poly.first_sums[m]));
    doc["second_numerators"].push_back(to_decimal(poly.second_sums[m]));
  }
  out << doc.dump(2) << '\n';
}

void write_dominance(const Context& ctx, const std::vector<DominanceReport>& reports,
                     std::ostream& out) {
  if (ctx.request.format == OutputFormat::Csv) {
    out << kDominanceCsvHeader << '\n';
    for (const DominanceReport& rep : reports) {
      for (const TailRow& row : rep.rows) {
        out << csv_field(ctx.label) << ',' << rep.n_vertices << ',' << rep.degree << ','
            << format_double(rep.p) << ',' << rep.replicates << ',' << rep.seed << ','
            << row.generation << ',' << row.k << ',' << format_double(row.tail_birth) << ','
            << format_double(row.se_birth) << ',' << format_double(row.tail_branching) << ','
            << format_double(row.se_branching) << ',' << (row.dominated ? 1 : 0) << '\n';
      }
    }
    return;
  }
  json doc;
  doc["command"] = "dominance";
  doc["graph"] = ctx.label;
  doc["N"] = ctx.graph.n_vertices();
  doc["D"] = ctx.graph.degree();
  doc["reports"] = json::array();
  for (const DominanceReport& rep : reports) {
    json r;
    r["p"] = rep.p;
    r["reps"] = rep.replicates;
    r["seed"] = rep.seed;
    r["all_dominated"] = rep.all_dominated();
    r["rows"] = json::array();
    for (const TailRow& row : rep.rows) {
      r["rows"].push_back({{"generation", row.generation},
                           {"k", row.k},
                           {"tail_y", row.tail_birth},
                           {"se_y", row.se_birth},
                           {"tail_x", row.tail_branching},
                           {"se_x", row.se_branching},
                           {"dominated", row.dominated}});
    }
    doc["reports"].push_back(std::move(r));
  }
  out << doc.dump(2) << '\n';
}

void execute_checked(const Context& ctx, std::ostream& out) {
  const CommandRequest& req = ctx.request;
  const Graph& graph = ctx.graph;
  EnumerationOptions oracle;
  oracle.edge_cap = edge_cap_from_environment();
  oracle.workers = req.workers;

  switch (req.subcommand) {
    case Subcommand::Bounds: {
      std::vector<MomentRow> rows;
      for (double p : req.p_values) rows.push_back(bounds_row(graph, p));
      write_moment_rows(ctx, rows, out);
      return;
    }
    case Subcommand::Oracle: {
      const bool many = req.polynomial || req.p_values.size() > 1;
      std::optional<MomentPolynomial> poly;
      if (many) poly = moment_polynomial(graph, oracle);
      if (req.polynomial) {
        write_polynomial(ctx, *poly, out);
        return;
      }
      std::vector<MomentRow> rows;
      for (double p : req.p_values) {
        MomentRow row = bounds_row(graph, p);
        row.exact = poly ? poly->evaluate(p) : exact_moments(graph, p, oracle);
        rows.push_back(row);
      }
      write_moment_rows(ctx, rows, out);
      return;
    }
    case Subcommand::Simulate: {
      std::optional<MomentPolynomial> poly;
      if (req.include_oracle) poly = moment_polynomial(graph, oracle);
      std::vector<MomentRow> rows;
      for (double p : req.p_values) {
        MomentRow row = bounds_row(graph, p);
        row.estimate = estimate_moments(graph, p, req.replicates, req.seed, req.workers);
        if (poly) row.exact = poly->evaluate(p);
        rows.push_back(row);
      }
      write_moment_rows(ctx, rows, out);
      return;
    }
    case Subcommand::Sweep: {
      SweepOptions options;
      options.replicates = req.replicates;
      options.seed = req.seed;
      options.include_oracle = req.include_oracle;
      options.workers = req.workers;
      options.oracle = oracle;
      const SweepResult result = sweep(graph, req.p_values, options);
      std::vector<MomentRow> rows;
      for (const SweepRow& s : result.rows) {
        rows.push_back({s.p, s.estimate, s.branching, s.isolation, s.combined, s.exact});
      }
      write_moment_rows(ctx, rows, out);
      return;
    }
    case Subcommand::Dominance: {
      std::vector<DominanceReport> reports;
      for (double p : req.p_values) {
        reports.push_back(dominance_report(graph, p, req.replicates, req.seed, req.workers));
      }
      write_dominance(ctx, reports, out);
      return;
    }
  }
}

void report_error(const CommandRequest* request, std::string_view name, const std::string& message,
                  std::ostream& out, std::ostream& err) {
  err << "bondperc: " << name << ": " << message << '\n';
  if (request != nullptr && request->format == OutputFormat::Json) {
    json doc;
    doc["error"] = {{"name", name}, {"message", message}};
    out << doc.dump(2) << '\n';
  }
}

}  // namespace

std::string_view to_string(Subcommand command) noexcept {
  switch (command) {
    case Subcommand::Bounds: return "bounds";
    case Subcommand::Oracle: return "oracle";
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Dominance: return "dominance";
  }
  return "unknown";
}

std::string CommandRequest::graph_label() const {
  return graph_name ? *graph_name : edge_file.value_or("");
}

std::vector<double> parse_p_grid(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  for (std::size_t pos = spec.find(':'); pos != std::string_view::npos; pos = spec.find(':', begin)) {
    parts.push_back(spec.substr(begin, pos - begin));
    begin = pos + 1;
  }
  parts.push_back(spec.substr(begin));

  if (parts.size() == 1) {
    const double p = parse_double(parts[0]);
    if (!(p >= 0 && p <= 1)) throw Error(ErrorCode::UsageError, "p must lie in [0, 1]");
    return {p};
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::UsageError, "p-grid must be \"start:end:step\", got '" +
                                           std::string(spec) + "'");
  }
  try {
    return make_grid(parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]));
  } catch (const Error& e) {
    throw Error(ErrorCode::UsageError, e.what());
  }
}

CommandRequest parse_args(std::span<const std::string> args) {
  CommandRequest req;
  CLI::App app{"Bond-percolation cluster-size moments: bounds, exact enumeration, Monte Carlo",
               "bondperc"};
  app.require_subcommand(1);
  app.footer(std::string(kUsageTail));

  std::string graph_name, edge_file, p_text, p_grid, format = "csv", output;
  bool oracle_flag = false, polynomial_flag = false;
  req.workers = std::max(1u, std::thread::hardware_concurrency());

  struct Entry {
    Subcommand command;
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {Subcommand::Bounds, "bounds", "Evaluate the branching and isolated-vertex upper bounds"},
      {Subcommand::Oracle, "oracle", "Exact moments by enumerating every edge configuration"},
      {Subcommand::Simulate, "simulate", "Monte Carlo estimate of E(S) and E(S^2)"},
      {Subcommand::Sweep, "sweep", "Bounds, estimates and optional exact values over a p-grid"},
      {Subcommand::Dominance, "dominance", "Per-generation tail comparison, birth vs branching"},
  };
  std::vector<std::pair<CLI::App*, Subcommand>> subs;
  for (const Entry& entry : entries) {
    CLI::App* sub = app.add_subcommand(entry.name, entry.help);
    auto* g = sub->add_option("--graph", graph_name, "Builtin graph name");
    auto* f = sub->add_option("--edge-file", edge_file, "Edge-list file");
    g->excludes(f);
    f->excludes(g);
    auto* p = sub->add_option("--p", p_text, "Edge-open probability");
    auto* grid = sub->add_option("--p-grid", p_grid, "Grid start:end:step (inclusive)");
    p->excludes(grid);
    grid->excludes(p);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", output, "Output file (default: standard output)");
    sub->add_option("--workers", req.workers, "Worker threads")->check(CLI::PositiveNumber);
    if (entry.command == Subcommand::Simulate || entry.command == Subcommand::Sweep ||
        entry.command == Subcommand::Dominance) {
      sub->add_option("--reps", req.replicates, "Replicates per p")->check(CLI::PositiveNumber);
      sub->add_option("--seed", req.seed, "Base seed");
    }
    if (entry.command == Subcommand::Simulate || entry.command == Subcommand::Sweep) {
      sub->add_flag("--oracle", oracle_flag, "Also compute exact moments by enumeration");
    }
    if (entry.command == Subcommand::Oracle) {
      sub->add_flag("--polynomial", polynomial_flag,
                    "Dump the exact moment polynomial coefficients");
    }
    subs.emplace_back(sub, entry.command);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::UsageError, std::string(e.what()) + "\n" + app.help());
  }

  for (const auto& [sub, command] : subs) {
    if (sub->parsed()) req.subcommand = command;
  }
  if (graph_name.empty() == edge_file.empty()) {
    throw Error(ErrorCode::UsageError, "exactly one of --graph or --edge-file is required");
  }
  if (!graph_name.empty()) req.graph_name = graph_name;
  if (!edge_file.empty()) req.edge_file = edge_file;

  const bool needs_p = !(req.subcommand == Subcommand::Oracle && polynomial_flag);
  if (p_text.empty() && p_grid.empty()) {
    if (needs_p) throw Error(ErrorCode::UsageError, "one of --p or --p-grid is required");
  } else {
    req.p_values = parse_p_grid(p_text.empty() ? p_grid : p_text);
    if (!p_text.empty() && req.p_values.size() != 1) {
      throw Error(ErrorCode::UsageError, "--p takes a single probability; use --p-grid");
    }
  }
  if ((req.subcommand == Subcommand::Simulate || req.subcommand == Subcommand::Sweep) &&
      req.replicates < 2) {
    throw Error(ErrorCode::UsageError, "--reps must be at least 2");
  }
  req.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (!output.empty()) req.output_path = output;
  req.include_oracle = oracle_flag;
  req.polynomial = polynomial_flag;
  return req;
}

int execute(const CommandRequest& request, std::ostream& out, std::ostream& err) {
  try {
    Context ctx{request, request.graph_label(), resolve_graph(request)};
    if (request.output_path) {
      std::ostringstream buffer;
      execute_checked(ctx, buffer);
      std::ofstream file(*request.output_path, std::ios::binary);
      if (!file || !(file << buffer.str())) {
        throw Error(ErrorCode::IoError, "cannot write '" + *request.output_path + "'");
      }
    } else {
      execute_checked(ctx, out);
    }
    return 0;
  } catch (const Error& e) {
    report_error(&request, e.name(), e.what(), out, err);
    return is_precondition_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    report_error(&request, "InternalError", e.what(), out, err);
    return 1;
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CommandRequest request;
  try {
    request = parse_args(args);
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const Error& e) {
    report_error(nullptr, e.name(), e.what(), out, err);
    return 2;
  }
  return execute(request, out, err);
}

}  // namespace bondperc::cli
