// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/random.hpp"

#include <cmath>
#include <numbers>

namespace gsn {
namespace {

constexpr std::uint32_t kPhiloxW32A = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW32B = 0xBB67AE85;
constexpr std::uint32_t kPhiloxM4x32A = 0xD2511F53;
constexpr std::uint32_t kPhiloxM4x32B = 0xCD9E8D57;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  lo = static_cast<std::uint32_t>(product);
  hi = static_cast<std::uint32_t>(product >> 32);
}

// 53-bit mantissa from a 64-bit word; result in [0, 1).
inline double to_unit(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t word = (static_cast<std::uint64_t>(hi) << 32) | lo;
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

}  // namespace

Philox4x32::Counter Philox4x32::block(Counter ctr, Key key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mulhilo(kPhiloxM4x32A, ctr[0], lo0, hi0);
    mulhilo(kPhiloxM4x32B, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW32A;
    key[1] += kPhiloxW32B;
  }
  return ctr;
}

RandomSource::RandomSource(std::uint64_t master_seed, std::uint32_t stream_id) noexcept
    : seed_(master_seed),
      stream_(stream_id),
      key_{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)} {}

Philox4x32::Counter RandomSource::bits(std::uint64_t index, std::uint32_t substream) const noexcept {
  return Philox4x32::block({static_cast<std::uint32_t>(index),
                            static_cast<std::uint32_t>(index >> 32), stream_, substream},
                           key_);
}

double RandomSource::uniform(std::uint64_t index, std::uint32_t substream) const noexcept {
  const auto b = bits(index, substream);
  return to_unit(b[0], b[1]);
}

double RandomSource::normal(std::uint64_t index, std::uint32_t substream) const noexcept {
  const auto b = bits(index, substream);
  // 1 - u maps [0, 1) onto (0, 1], keeping the log finite.
  const double u1 = 1.0 - to_unit(b[0], b[1]);
  const double u2 = to_unit(b[2], b[3]);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

int RandomSource::sign(double p, std::uint64_t index, std::uint32_t substream) const noexcept {
  return uniform(index, substream) < p ? 1 : -1;
}

}  // namespace gsn
