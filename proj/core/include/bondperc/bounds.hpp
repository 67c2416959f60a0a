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
#include <string_view>

#include "bondperc/graph.hpp"

namespace bondperc {

/// Parameters shared by both bound families for a D-regular graph on N
/// vertices at edge probability p.
struct BoundParams {
  unsigned degree = 0;        // D
  std::size_t n_vertices = 0; // N
  double p = 0;
  double nu = 0;              // (D - 1) p, mean offspring of a non-root individual
  double q = 1;               // 1 - p
  unsigned horizon = 0;       // R = N - 1

  /// Throws BadParameter (D < 1, N < 2) or BadProbability.
  static BoundParams make(unsigned degree, std::size_t n_vertices, double p);
  static BoundParams for_graph(const Graph& graph, double p);
};

enum class MomentKind { Branching, Isolation, Combined, Exact, Estimate };

std::string_view to_string(MomentKind kind) noexcept;

/// A value (or bound) for E(S) and E(S^2).
struct MomentPair {
  double first = 1;
  double second = 1;
  MomentKind kind = MomentKind::Exact;
};

/// E(total progeny through generation R) of the branching process with
/// Binomial(D, p) root offspring and Binomial(D - 1, p) offspring after:
///   1 + D p (1 - nu^R) / (1 - nu),   nu = (D - 1) p,
/// with the removable singularity at nu = 1 filled by 1 + D p R.
/// Throws BadParameter (D < 1, R < 1) or BadProbability.
double branching_total_first_moment(unsigned degree, double p, unsigned horizon);

/// Second moment of the same total:
///   m1^2 + D p (1 - p) / (1 - nu)^2 * ((1 - nu^R)(1 + nu^{R+1}) / (1 - nu) - 2 R nu^R).
/// Near nu = 1 the bracket is evaluated through an equivalent finite sum,
/// and at nu = 1 through its limit m1^2 + D p (1 - p) R (R + 1)(2R + 1) / 6.
double branching_total_second_moment(unsigned degree, double p, unsigned horizon);

/// Values of the two moments exactly at nu = 1 (p is still used for D p and
/// 1 - p).
double branching_first_moment_at_criticality(unsigned degree, double p, unsigned horizon);
double branching_second_moment_at_criticality(unsigned degree, double p, unsigned horizon);

/// Upper bounds on E(S), E(S^2) from the branching-process domination:
/// the total-progeny moments above with R = N - 1.
MomentPair branching_bounds(const BoundParams& params);

/// Upper bounds from counting isolated vertices, q = 1 - p:
///   E(S)   <= N - (N - 1) q^D
///   E(S^2) <= N^2 - (N - 1)(2N - 1) q^D + (N - 1)(N - 2) q^{2D - 1}
MomentPair isolation_bounds(const BoundParams& params);

/// Pointwise minimum of the two families, taken separately per moment.
MomentPair combined_bounds(const BoundParams& params);

namespace closed_form {

// Literal closed-form expressions, unguarded near nu = 1. Exposed for
// cross-checking the guarded evaluation above.

/// (1 - nu^R) / (1 - nu)
double geometric_sum(double nu, unsigned horizon);

/// D p (1 - p) / (1 - nu)^2 * ((1 - nu^R)(1 + nu^{R+1}) / (1 - nu) - 2 R nu^R)
double variance_term(unsigned degree, double p, unsigned horizon);

/// Same quantity before simplification:
///   D p (1 - p) G^2 + D p nu (1 - p) / (1 - nu)^2 *
///       ((1 - nu^{2R-1}) / (1 - nu) - (2R - 1) nu^{R-1}),   G = geometric_sum.
double variance_term_unsimplified(unsigned degree, double p, unsigned horizon);

}  // namespace closed_form

}  // namespace bondperc
