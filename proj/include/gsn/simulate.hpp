// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>

#include "gsn/model.hpp"

namespace gsn {

/// Indices per parallel work unit. Part of the determinism contract: the
/// reduction tree is built over blocks of exactly this size.
inline constexpr std::uint64_t kSimBlockSize = std::uint64_t{1} << 16;

struct SimOptions {
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Sample mean with its plug-in standard error.
struct Estimate {
  double mean = 0.0;
  double stderr = 0.0;
};

struct SimResult {
  double mean_cost = 0.0;
  double stderr = 0.0;
  std::uint64_t n = 0;
  double empirical_power_T = 0.0;
  double empirical_power_A = 0.0;
  double empirical_corr_SXk = 0.0;
  // Standard errors of the auxiliary statistics, and E{Z X_k}.
  double stderr_power_T = 0.0;
  double stderr_power_A = 0.0;
  double stderr_corr_SXk = 0.0;
  double empirical_corr_ZXk = 0.0;
  double stderr_corr_ZXk = 0.0;
};

/// Runs the full pipeline n times: source, observations, encoders, MAC and
/// receiver. The receiver applies the gains of its strategy (see
/// receiver_gains). Power statistics average X^2 over the sensors of each
/// side; the cross statistics use the first adversary.
///
/// The result is a pure function of (profile, cfg, n, seed); thread count
/// does not change a single bit of it.
SimResult simulate(const StrategyProfile& profile, const NetworkConfig& cfg, std::uint64_t n,
                   std::uint64_t seed, SimOptions options = {});

struct PowerEstimate {
  Estimate transmitter;
  Estimate adversary;
};

PowerEstimate empirical_power(const StrategyProfile& profile, const NetworkConfig& cfg,
                              std::uint64_t n, std::uint64_t seed, SimOptions options = {});

struct CrossStats {
  Estimate corr_SXk;
  Estimate corr_ZXk;
};

/// Throws NoAdversaries when K = 0.
CrossStats empirical_cross_stats(const StrategyProfile& profile, const NetworkConfig& cfg,
                                 std::uint64_t n, std::uint64_t seed, SimOptions options = {});

}  // namespace gsn
