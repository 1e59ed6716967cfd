// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
// Shared fixtures and a small generator for property tests.
#pragma once

#include <cstdint>
#include <random>

#include "gsn/model.hpp"

namespace gsn::testing {

inline NetworkConfig unit_config(int M, int K) {
  NetworkConfig c;
  c.M = M;
  c.K = K;
  c.var_S = c.var_WT = c.var_WA = c.var_Z = 1.0;
  c.P_T = c.P_A = 1.0;
  return c;
}

/// Two transmitters, one jammer, everything unit.
inline NetworkConfig config_a() { return unit_config(2, 1); }

/// As config_a with two jammers.
inline NetworkConfig config_b() { return unit_config(2, 2); }

/// As config_a with noisier transmitter observations.
inline NetworkConfig config_c() {
  NetworkConfig c = config_a();
  c.var_WT = 2.0;
  return c;
}

/// Point-to-point: one clean sensor, no jammer.
inline NetworkConfig point_to_point() {
  NetworkConfig c = unit_config(1, 0);
  c.var_WT = 0.0;
  return c;
}

/// Draws valid configurations from a broad, fixed-seed distribution.
class ConfigGenerator {
 public:
  explicit ConfigGenerator(std::uint64_t seed) : rng_(seed) {}

  NetworkConfig operator()() {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_real_distribution<double> level(0.2, 3.0);
    NetworkConfig c;
    c.M = count(rng_);
    c.K = count(rng_);
    c.var_S = level(rng_);
    c.var_WT = level(rng_);
    c.var_WA = level(rng_);
    c.var_Z = level(rng_);
    c.P_T = level(rng_);
    c.P_A = level(rng_);
    return c;
  }

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gsn::testing
