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

#include "bondperc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bondperc/error.hpp"

namespace bondperc {

namespace {

// Inside this distance from nu = 1 the limit expressions are used.
constexpr double kCriticalWindow = 1e-9;
// Inside this distance the closed forms lose digits to cancellation
// (the variance bracket divides by (1 - nu)^3); use finite sums instead.
constexpr double kSeriesWindow = 0.1;

void require_branching_args(unsigned degree, double p, unsigned horizon) {
  require_probability(p);
  if (degree < 1) throw Error(ErrorCode::BadParameter, "degree must be >= 1");
  if (horizon < 1) throw Error(ErrorCode::BadParameter, "horizon must be >= 1");
}

double nu_of(unsigned degree, double p) { return static_cast<double>(degree - 1) * p; }

// Sum_{k<R} nu^k.
double geometric_series(double nu, unsigned horizon) {
  double sum = 0, term = 1;
  for (unsigned k = 0; k < horizon; ++k) {
    sum += term;
    term *= nu;
  }
  return sum;
}

// G_R^2 + nu H_R where G_j = sum_{i<j} nu^i and
// H_R = sum_{j=1}^{R-1} nu^{R-1-j} G_j^2 (so H_{R+1} = nu H_R + G_R^2).
// Equals ((1 - nu^R)(1 + nu^{R+1}) / (1 - nu) - 2 R nu^R) / (1 - nu)^2.
double variance_bracket_series(double nu, unsigned horizon) {
  double g = 1;  // G_1
  double h = 0;  // H_1
  double power = nu;
  for (unsigned j = 1; j < horizon; ++j) {
    h = nu * h + g * g;
    g += power;
    power *= nu;
  }
  return g * g + nu * h;
}

double geometric(double nu, unsigned horizon) {
  const double gap = std::abs(1.0 - nu);
  if (gap < kCriticalWindow) return static_cast<double>(horizon);
  if (gap < kSeriesWindow) return geometric_series(nu, horizon);
  return closed_form::geometric_sum(nu, horizon);
}

double variance_bracket(double nu, unsigned horizon) {
  const double gap = std::abs(1.0 - nu);
  const double r = horizon;
  if (gap < kCriticalWindow) return r * (r + 1) * (2 * r + 1) / 6.0;
  if (gap < kSeriesWindow) return variance_bracket_series(nu, horizon);
  const double nu_r = std::pow(nu, r);
  return ((1 - nu_r) * (1 + nu_r * nu) / (1 - nu) - 2 * r * nu_r) / ((1 - nu) * (1 - nu));
}

}  // namespace

BoundParams BoundParams::make(unsigned degree, std::size_t n_vertices, double p) {
  require_probability(p);
  if (degree < 1) throw Error(ErrorCode::BadParameter, "degree must be >= 1");
  if (n_vertices < 2) throw Error(ErrorCode::BadParameter, "need at least 2 vertices");
  BoundParams params;
  params.degree = degree;
  params.n_vertices = n_vertices;
  params.p = p;
  params.nu = nu_of(degree, p);
  params.q = 1.0 - p;
  params.horizon = static_cast<unsigned>(n_vertices - 1);
  return params;
}

BoundParams BoundParams::for_graph(const Graph& graph, double p) {
  return make(graph.degree(), graph.n_vertices(), p);
}

std::string_view to_string(MomentKind kind) noexcept {
  switch (kind) {
    case MomentKind::Branching: return "branching";
    case MomentKind::Isolation: return "isolation";
    case MomentKind::Combined: return "combined";
    case MomentKind::Exact: return "exact";
    case MomentKind::Estimate: return "estimate";
  }
  return "unknown";
}

double branching_total_first_moment(unsigned degree, double p, unsigned horizon) {
  require_branching_args(degree, p, horizon);
  return 1.0 + degree * p * geometric(nu_of(degree, p), horizon);
}

double branching_total_second_moment(unsigned degree, double p, unsigned horizon) {
  require_branching_args(degree, p, horizon);
  const double first = branching_total_first_moment(degree, p, horizon);
  return first * first + degree * p * (1 - p) * variance_bracket(nu_of(degree, p), horizon);
}

double branching_first_moment_at_criticality(unsigned degree, double p, unsigned horizon) {
  require_branching_args(degree, p, horizon);
  return 1.0 + degree * p * horizon;
}

double branching_second_moment_at_criticality(unsigned degree, double p, unsigned horizon) {
  require_branching_args(degree, p, horizon);
  const double r = horizon;
  const double first = 1.0 + degree * p * r;
  return first * first + degree * p * (1 - p) * r * (r + 1) * (2 * r + 1) / 6.0;
}

MomentPair branching_bounds(const BoundParams& params) {
  return {branching_total_first_moment(params.degree, params.p, params.horizon),
          branching_total_second_moment(params.degree, params.p, params.horizon),
          MomentKind::Branching};
}

MomentPair isolation_bounds(const BoundParams& params) {
  const double n = static_cast<double>(params.n_vertices);
  const double q_d = std::pow(params.q, params.degree);
  const double q_2d1 = std::pow(params.q, 2.0 * params.degree - 1.0);
  return {n - (n - 1) * q_d,
          n * n - (n - 1) * (2 * n - 1) * q_d + (n - 1) * (n - 2) * q_2d1,
          MomentKind::Isolation};
}

MomentPair combined_bounds(const BoundParams& params) {
  const MomentPair a = branching_bounds(params);
  const MomentPair b = isolation_bounds(params);
  return {std::min(a.first, b.first), std::min(a.second, b.second), MomentKind::Combined};
}

namespace closed_form {

double geometric_sum(double nu, unsigned horizon) {
  return (1.0 - std::pow(nu, static_cast<double>(horizon))) / (1.0 - nu);
}

double variance_term(unsigned degree, double p, unsigned horizon) {
  const double nu = nu_of(degree, p);
  const double r = horizon;
  const double nu_r = std::pow(nu, r);
  return degree * p * (1 - p) / ((1 - nu) * (1 - nu)) *
         ((1 - nu_r) * (1 + nu_r * nu) / (1 - nu) - 2 * r * nu_r);
}

double variance_term_unsimplified(unsigned degree, double p, unsigned horizon) {
  const double nu = nu_of(degree, p);
  const double r = horizon;
  const double g = geometric_sum(nu, horizon);
  return degree * p * (1 - p) * g * g +
         degree * p * nu * (1 - p) / ((1 - nu) * (1 - nu)) *
             ((1 - std::pow(nu, 2 * r - 1)) / (1 - nu) - (2 * r - 1) * std::pow(nu, r - 1));
}

}  // namespace closed_form

}  // namespace bondperc
