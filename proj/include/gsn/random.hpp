// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace gsn {

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
///
/// The block function maps (counter, key) to 128 random bits with no hidden
/// state, so any sample can be produced directly from its coordinates.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter counter, Key key);
};

/// Stream identifiers used by the simulator. Per-sensor noises are
/// substreams of the W_T / W_A / jammer streams.
enum class Stream : std::uint32_t {
  Source = 0,
  TransmitterNoise = 1,
  AdversaryNoise = 2,
  Sign = 3,
  Jammer = 4,
  Channel = 5,
};

/// Stateless random stream addressed by (master_seed, stream_id, substream,
/// index). Identical coordinates give identical draws, so the way work is
/// split across threads has no effect on the values produced.
class RandomSource {
 public:
  RandomSource(std::uint64_t master_seed, std::uint32_t stream_id) noexcept;
  RandomSource(std::uint64_t master_seed, Stream stream) noexcept
      : RandomSource(master_seed, static_cast<std::uint32_t>(stream)) {}

  std::uint64_t master_seed() const noexcept { return seed_; }
  std::uint32_t stream_id() const noexcept { return stream_; }

  /// Raw 128-bit block for one index.
  Philox4x32::Counter bits(std::uint64_t index, std::uint32_t substream = 0) const noexcept;

  /// Uniform on [0, 1) with 53 random bits.
  double uniform(std::uint64_t index, std::uint32_t substream = 0) const noexcept;

  /// Standard normal via Box-Muller on the two 64-bit halves of one block.
  double normal(std::uint64_t index, std::uint32_t substream = 0) const noexcept;

  /// +1 with probability p, -1 otherwise.
  int sign(double p, std::uint64_t index, std::uint32_t substream = 0) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint32_t stream_;
  Philox4x32::Key key_;
};

}  // namespace gsn
