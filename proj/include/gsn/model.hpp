// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gsn/error.hpp"

namespace gsn {

/// Symmetric network: M transmitters and K adversaries observe one Gaussian
/// source through i.i.d. Gaussian noise and share an additive Gaussian MAC.
struct NetworkConfig {
  int M = 0;
  int K = 0;
  double var_S = 0.0;
  double var_WT = 0.0;
  double var_WA = 0.0;
  double var_Z = 1.0;
  double P_T = 0.0;
  double P_A = 0.0;
};

/// Relative slack allowed on power budgets.
inline constexpr double kPowerRelTol = 1e-9;

// --- transmitter --------------------------------------------------------

/// X_m = gain * U_m.
struct DeterministicLinear {
  double gain = 0.0;
};

/// X_m = gamma * gain * U_m, with one gamma per time index shared by every
/// transmitter (and by the receiver when it knows the sign). P(gamma=+1) = p.
struct RandomizedSign {
  double gain = 0.0;
  double p = 0.5;
};

using TransmitterStrategy = std::variant<DeterministicLinear, RandomizedSign>;

// --- adversary ----------------------------------------------------------

/// Every adversary emits the same realization theta ~ N(0, variance).
struct CoordinatedNoise {
  double variance = 0.0;
};

/// Each adversary emits its own i.i.d. N(0, variance).
struct IndependentNoise {
  double variance = 0.0;
};

/// X_k = gain * U_k + residual, where the residual fills the remaining budget
/// P_A - gain^2 (var_S + var_WA). The residual is shared across adversaries
/// when coordinated_residual is set.
struct LinearPlusNoise {
  double gain = 0.0;
  bool coordinated_residual = true;
};

using AdversaryStrategy =
    std::variant<CoordinatedNoise, IndependentNoise, LinearPlusNoise>;

// --- receiver -----------------------------------------------------------

/// Fixed linear decoder. With knows_sign the estimate is gain * gamma * Y.
struct FixedLinear {
  double gain = 0.0;
};

/// Linear MMSE decoder computed from the exact second-order statistics.
struct MMSEFromStats {};

struct ReceiverStrategy {
  std::variant<FixedLinear, MMSEFromStats> rule = MMSEFromStats{};
  bool knows_sign = false;
};

struct StrategyProfile {
  TransmitterStrategy transmitter = DeterministicLinear{};
  AdversaryStrategy adversary = CoordinatedNoise{};
  ReceiverStrategy receiver{};
};

/// Throws Error(NonPositiveChannelNoise | NegativeParameter) naming the field.
void validate_config(const NetworkConfig& cfg);

/// Non-throwing variant: returns an empty string when the config is valid,
/// otherwise the name of the offending field.
std::string config_violation(const NetworkConfig& cfg);

/// Analytic E{X^2} of one sensor's channel input. Throws InfeasiblePower if
/// the value exceeds the relevant budget beyond kPowerRelTol.
double strategy_power(const TransmitterStrategy& s, const NetworkConfig& cfg);
double strategy_power(const AdversaryStrategy& s, const NetworkConfig& cfg);

/// Residual variance of a LinearPlusNoise adversary (clamped at 0 within
/// tolerance). Throws InfeasiblePower if the linear part alone overspends.
double residual_variance(const LinearPlusNoise& s, const NetworkConfig& cfg);

/// Validates the config and both power budgets of the profile.
void check_feasible(const StrategyProfile& profile, const NetworkConfig& cfg);

double transmitter_gain(const TransmitterStrategy& s);

/// Probability of gamma = +1 (1 for deterministic transmitters).
double sign_probability(const TransmitterStrategy& s);

/// Linear gain on U_k (0 for the pure-noise variants).
double adversary_gain(const AdversaryStrategy& s);

/// Variance of the adversarial noise term and whether it is shared.
struct AdversaryNoise {
  double variance = 0.0;
  bool coordinated = false;
};
AdversaryNoise adversary_noise(const AdversaryStrategy& s, const NetworkConfig& cfg);

std::string describe(const TransmitterStrategy& s);
std::string describe(const AdversaryStrategy& s);

}  // namespace gsn
