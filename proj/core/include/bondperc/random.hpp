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

#include <array>
#include <cstdint>

namespace bondperc {

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Maps a 128-bit counter and 64-bit key to 128
/// pseudo-random bits with no internal state.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key) noexcept;
};

/// SplitMix64 finalizer; used to derive independent keys from (seed, index).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic child seed for sub-experiment `index` of `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Separates random streams used for different purposes under one seed.
enum class StreamDomain : std::uint64_t {
  Percolation = 1,
  Branching = 2,
  GraphConstruction = 3,
};

/// A random stream addressed by (key, stream id). Block b of the stream is
/// Philox(counter = {b_lo, b_hi, id_lo, id_hi}, key), so any replicate's
/// stream can be constructed directly without advancing a shared generator.
///
/// Satisfies UniformRandomBitGenerator.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  CounterStream(std::uint64_t key, std::uint64_t stream_id) noexcept;

  /// Stream for replicate `replicate` of experiment `seed` in `domain`.
  static CounterStream for_replicate(std::uint64_t seed, StreamDomain domain,
                                     std::uint64_t replicate) noexcept;

  std::uint32_t next_u32() noexcept;
  std::uint64_t next_u64() noexcept;
  result_type operator()() noexcept { return next_u64(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept;

  /// Uniform integer in [0, n); n must be positive. Unbiased (Lemire's
  /// multiply-and-reject).
  std::uint64_t uniform_index(std::uint64_t n) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  bool operator==(const CounterStream&) const = default;

 private:
  void refill() noexcept;

  Philox4x32::Key key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  Philox4x32::Counter buffer_{};
  unsigned used_ = 4;
};

}  // namespace bondperc
