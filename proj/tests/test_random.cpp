// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include <doctest.h>

#include "gsn/random.hpp"

using namespace gsn;

TEST_CASE("Philox4x32-10 known-answer vectors") {
  // Reference vectors published with the Random123 library.
  using C = Philox4x32::Counter;
  CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("draws are pure functions of (seed, stream, index, substream)") {
  const RandomSource a(42, Stream::Source);
  const RandomSource b(42, Stream::Source);
  for (std::uint64_t i : {0ull, 1ull, 65535ull, 1ull << 40}) {
    CHECK(a.normal(i) == b.normal(i));
    CHECK(a.bits(i, 3) == b.bits(i, 3));
  }
  CHECK(a.bits(7) != RandomSource(42, Stream::Channel).bits(7));
  CHECK(a.bits(7) != RandomSource(43, Stream::Source).bits(7));
  CHECK(a.bits(7, 0) != a.bits(7, 1));
  CHECK(a.bits(7) != a.bits(8));
}

TEST_CASE("uniform lies in [0, 1)") {
  const RandomSource r(3, Stream::Sign);
  for (std::uint64_t i = 0; i < 10000; ++i) {
    const double u = r.uniform(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("standard normal passes the moment test at n = 1e6") {
  const RandomSource r(1, Stream::Source);
  constexpr std::uint64_t n = 1000000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const double z = r.normal(i);
    REQUIRE(std::isfinite(z));
    sum += z;
    sum_sq += z * z;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) <= 4.0 / std::sqrt(double(n)));
  CHECK(std::abs(var - 1.0) <= 0.01);
}

TEST_CASE("sign frequency tracks p") {
  const RandomSource r(9, Stream::Sign);
  constexpr std::uint64_t n = 200000;
  for (double p : {0.0, 0.25, 0.5, 1.0}) {
    double plus = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) plus += r.sign(p, i) > 0 ? 1.0 : 0.0;
    const double freq = plus / n;
    const double sd = std::sqrt(p * (1 - p) / n);
    CHECK(std::abs(freq - p) <= 4.0 * sd + 1e-15);
  }
}
