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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bondperc::cli {

enum class Subcommand { Bounds, Oracle, Simulate, Sweep, Dominance };
enum class OutputFormat { Csv, Json };

std::string_view to_string(Subcommand command) noexcept;

struct CommandRequest {
  Subcommand subcommand = Subcommand::Bounds;
  std::optional<std::string> graph_name;  // exactly one of graph_name / edge_file
  std::optional<std::string> edge_file;
  std::vector<double> p_values;
  std::size_t replicates = 100000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;  // standard output when empty
  bool include_oracle = false;             // simulate / sweep
  bool polynomial = false;                 // oracle: dump coefficients instead

  /// Value of the "graph" column: the builtin name or the edge-file path.
  std::string graph_label() const;
};

/// Thrown by parse_args for --help; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parses "start:end:step" (inclusive, final point clamped to end) or a
/// single probability. Throws UsageError.
std::vector<double> parse_p_grid(std::string_view spec);

/// `args` excludes the program name. Throws bondperc::Error(UsageError) with
/// the usage text appended, or HelpRequested.
CommandRequest parse_args(std::span<const std::string> args);

/// Runs a validated request, writing CSV or JSON to `out` (or the request's
/// output file). Returns 0 on success, 1 on a computation error and 2 when a
/// precondition is refused (e.g. TooManyEdges).
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_args + execute with the same exit-code convention.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// CSV column order, stable within a major version.
inline constexpr std::string_view kMomentCsvHeader =
    "graph,N,D,p,reps,seed,mean_s,se_s,mean_s2,se_s2,thm1_first,thm1_second,"
    "thm2_first,thm2_second,best_first,best_second,exact_first,exact_second";
inline constexpr std::string_view kDominanceCsvHeader =
    "graph,N,D,p,reps,seed,generation,k,tail_y,se_y,tail_x,se_x,dominated";

}  // namespace bondperc::cli
