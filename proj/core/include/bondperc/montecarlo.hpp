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
#include <optional>
#include <span>
#include <vector>

#include "bondperc/bounds.hpp"
#include "bondperc/graph.hpp"
#include "bondperc/oracle.hpp"

namespace bondperc {

/// One-pass mean/variance (Welford) with the pairwise merge rule of Chan,
/// Golub and LeVeque.
class RunningMoments {
 public:
  void push(double x) noexcept;
  void merge(const RunningMoments& other) noexcept;

  std::size_t count() const noexcept { return count_; }
  double mean() const noexcept { return mean_; }
  /// Sample variance (n - 1 denominator); 0 for fewer than two values.
  double variance() const noexcept;
  double standard_error() const noexcept;

 private:
  std::size_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

struct MomentEstimate {
  double mean_s = 0;
  double mean_s2 = 0;
  double se_s = 0;
  double se_s2 = 0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;

  MomentPair as_pair() const noexcept { return {mean_s, mean_s2, MomentKind::Estimate}; }
  bool operator==(const MomentEstimate&) const = default;
};

/// Replicates are processed in fixed blocks of this size; block accumulators
/// are merged in block order, which makes the estimate independent of the
/// worker count.
inline constexpr std::size_t kReplicateBlock = 4096;

/// Monte Carlo estimate of E(S) and E(S^2). Replicate r draws from the
/// counter stream (seed, r), so the result is bit-identical for any
/// `workers`. Throws BadParameter (replicates < 2, workers == 0) or
/// BadProbability.
MomentEstimate estimate_moments(const Graph& graph, double p, std::size_t replicates,
                                std::uint64_t seed, unsigned workers = 1);

struct SweepRow {
  double p = 0;
  MomentPair branching;
  MomentPair isolation;
  MomentPair combined;
  MomentEstimate estimate;
  std::optional<MomentPair> exact;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // ascending p
};

struct SweepOptions {
  std::size_t replicates = 100000;
  std::uint64_t seed = 0;
  bool include_oracle = false;
  unsigned workers = 1;
  EnumerationOptions oracle;
};

/// Seed used for grid point `index` of a sweep.
std::uint64_t grid_point_seed(std::uint64_t seed, std::size_t index) noexcept;

/// Evaluates bounds, a Monte Carlo estimate and (optionally) the exact
/// moments at every grid value. The grid is sorted first; point i uses
/// grid_point_seed(seed, i). Throws BadProbability for values outside
/// [0, 1], TooManyEdges if the oracle is requested beyond the cap.
SweepResult sweep(const Graph& graph, std::span<const double> p_grid, const SweepOptions& options);

/// start, start + step, ... up to end, with `end` always the final point.
/// Throws BadParameter unless 0 <= start <= end <= 1 and step > 0.
std::vector<double> make_grid(double start, double end, double step);

}  // namespace bondperc
