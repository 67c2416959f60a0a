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

#include "bondperc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bondperc/error.hpp"
#include "bondperc/percolation.hpp"
#include "bondperc/random.hpp"
#include "parallel.hpp"

namespace bondperc {

void RunningMoments::push(double x) noexcept {
  ++count_;
  const double delta = x - mean_;
  mean_ += delta / static_cast<double>(count_);
  m2_ += delta * (x - mean_);
}

void RunningMoments::merge(const RunningMoments& other) noexcept {
  if (other.count_ == 0) return;
  if (count_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count_);
  const double nb = static_cast<double>(other.count_);
  const double n = na + nb;
  const double delta = other.mean_ - mean_;
  mean_ += delta * nb / n;
  m2_ += other.m2_ + delta * delta * na * nb / n;
  count_ += other.count_;
}

double RunningMoments::variance() const noexcept {
  return count_ < 2 ? 0.0 : m2_ / static_cast<double>(count_ - 1);
}

double RunningMoments::standard_error() const noexcept {
  return count_ == 0 ? 0.0 : std::sqrt(variance() / static_cast<double>(count_));
}

MomentEstimate estimate_moments(const Graph& graph, double p, std::size_t replicates,
                                std::uint64_t seed, unsigned workers) {
  require_probability(p);
  if (replicates < 2) throw Error(ErrorCode::BadParameter, "replicates must be >= 2");
  if (workers == 0) throw Error(ErrorCode::BadParameter, "workers must be >= 1");

  const std::size_t n_blocks = (replicates + kReplicateBlock - 1) / kReplicateBlock;
  struct Block {
    RunningMoments s, s2;
  };
  std::vector<Block> blocks(n_blocks);
  std::vector<DisjointSets> scratch(workers);

  detail::parallel_for(n_blocks, workers, [&](unsigned worker, std::size_t b) {
    Block& block = blocks[b];
    const std::size_t end = std::min(replicates, (b + 1) * kReplicateBlock);
    for (std::size_t r = b * kReplicateBlock; r < end; ++r) {
      CounterStream stream = CounterStream::for_replicate(seed, StreamDomain::Percolation, r);
      const auto size = static_cast<double>(sample_cluster_size(graph, p, stream, scratch[worker]));
      block.s.push(size);
      block.s2.push(size * size);
    }
  });

  RunningMoments s, s2;
  for (const Block& block : blocks) {
    s.merge(block.s);
    s2.merge(block.s2);
  }
  return {s.mean(), s2.mean(), s.standard_error(), s2.standard_error(), replicates, seed};
}

std::uint64_t grid_point_seed(std::uint64_t seed, std::size_t index) noexcept {
  return derive_seed(seed, 0x5EED0000ull + index);
}

SweepResult sweep(const Graph& graph, std::span<const double> p_grid, const SweepOptions& options) {
  std::vector<double> grid(p_grid.begin(), p_grid.end());
  for (double p : grid) require_probability(p);
  std::sort(grid.begin(), grid.end());

  std::optional<MomentPolynomial> poly;
  if (options.include_oracle) poly = moment_polynomial(graph, options.oracle);

  SweepResult result;
  result.rows.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = grid[i];
    const BoundParams params = BoundParams::for_graph(graph, p);
    SweepRow row;
    row.p = p;
    row.branching = branching_bounds(params);
    row.isolation = isolation_bounds(params);
    row.combined = combined_bounds(params);
    row.estimate = estimate_moments(graph, p, options.replicates,
                                    grid_point_seed(options.seed, i), options.workers);
    if (poly) row.exact = poly->evaluate(p);
    result.rows.push_back(row);
  }
  return result;
}

std::vector<double> make_grid(double start, double end, double step) {
  if (!(start >= 0.0 && start <= end && end <= 1.0 && step > 0.0)) {
    throw Error(ErrorCode::BadParameter, "grid needs 0 <= start <= end <= 1 and step > 0");
  }
  std::vector<double> grid;
  // Points within a small fraction of a step from `end` are replaced by it.
  const double slack = step * 1e-6;
  for (std::size_t i = 0;; ++i) {
    const double value = start + static_cast<double>(i) * step;
    if (value >= end - slack) break;
    grid.push_back(value);
  }
  grid.push_back(end);
  return grid;
}

}  // namespace bondperc
