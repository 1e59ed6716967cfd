// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsn/model.hpp"
#include "gsn/simulate.hpp"

namespace gsn {

inline constexpr int kDefaultGridPoints = 41;

/// Uniform grid of `points` values spanning [lo, hi]. A single point when
/// lo == hi.
std::vector<double> default_grid(double lo, double hi, int points = kDefaultGridPoints);

/// Largest feasible |gain| of a linear adversary, sqrt(P_A / (var_S + var_WA)).
double max_adversary_gain(const NetworkConfig& cfg);

enum class SweptSide { Transmitter, Adversary, BernoulliP };

/// Monte Carlo column settings. mc_n = 0 leaves the column empty.
struct McOptions {
  std::uint64_t mc_n = 0;
  std::uint64_t seed = 1;
  SimOptions sim{};
};

/// A one-parameter family around fixed_profile:
///  - Transmitter: the transmitter gain takes each grid value.
///  - Adversary: fixed_profile.adversary must be LinearPlusNoise; its gain
///    takes each grid value.
///  - BernoulliP: fixed_profile.transmitter must be RandomizedSign; p takes
///    each grid value. The adversary (LinearPlusNoise) knows p but not the
///    sign realizations, and plays whichever sign of its gain hurts more.
struct SweepSpec {
  SweptSide side = SweptSide::Adversary;
  std::vector<double> grid;
  StrategyProfile fixed_profile;
  NetworkConfig cfg;
  McOptions mc{};
};

struct SweepRow {
  double param = 0.0;
  double analytic_cost = 0.0;
  std::optional<double> mc_cost;
  std::optional<double> mc_stderr;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  double argmax_param = 0.0;
  double argmin_param = 0.0;
};

/// Rows come back in grid order. Grid values must be distinct; ties in the
/// extremum (within 1e-12 relative) resolve to the smallest parameter.
SweepResult run_sweep(const SweepSpec& spec);

/// Jammer gain sweep against randomized transmitters (p = 1/2), coordinated
/// residual, sign-aware MMSE receiver.
SweepResult sweep_adversary_setting1(const NetworkConfig& cfg, const std::vector<double>& grid,
                                     const McOptions& mc = {});

/// Jammer gain sweep against deterministic transmitters, independent
/// residual, MMSE receiver re-optimized for each gain.
SweepResult sweep_adversary_setting2(const NetworkConfig& cfg, const std::vector<double>& grid,
                                     const McOptions& mc = {});

/// Bernoulli parameter sweep against a linear jammer of gain magnitude |lambda|.
SweepResult sweep_bernoulli_p(const NetworkConfig& cfg, const std::vector<double>& grid,
                              double lambda, const McOptions& mc = {});

struct SaddleOptions {
  double tolerance = 1e-9;
  int grid_points = kDefaultGridPoints;
  /// Profile to test in place of the default equilibrium candidate.
  std::optional<StrategyProfile> candidate;
};

struct SaddleReport {
  int setting = 1;
  double J_star = 0.0;
  double max_lhs_violation = 0.0;
  double max_rhs_violation = 0.0;
  std::string worst_adversary;
  double worst_adversary_param = 0.0;
  double worst_transmitter_param = 0.0;
  /// Bernoulli parameter of the worst transmitter deviation (setting 1).
  double worst_transmitter_p = 1.0;
  double tolerance = 0.0;
  bool passed = false;
  /// Deviations come from finite linear-plus-Gaussian families only.
  std::string scope = "family-restricted verification";
};

/// Checks both saddle inequalities against finite deviation families.
///
/// Adversary deviations: LinearPlusNoise over the gain grid (coordinated and
/// independent residual), plus CoordinatedNoise and IndependentNoise over a
/// variance grid on [0, P_A].
///
/// Setting 1: the adversary side is scored with the receiver held at the
/// candidate's gains; transmitter deviations (gain grid x p grid) face the
/// candidate adversary with a re-optimized sign-aware receiver.
///
/// Setting 2 is leader/follower: adversary deviations are scored with a
/// re-optimized receiver, and each transmitter deviation (gain grid) is
/// scored by the adversary's best response from the family above.
SaddleReport verify_saddle(const NetworkConfig& cfg, int setting, const SaddleOptions& options = {});

struct CoordinationReport {
  double setting1_coordinated = 0.0;
  double setting1_uncoordinated = 0.0;
  double setting2 = 0.0;
  double separation = 0.0;
  /// Strict when K >= 2, equality (1e-12) when K = 1.
  bool uncoordinated_below_coordinated = false;
  /// Strict when P_A > 0, equality when P_A = 0.
  bool setting1_below_setting2 = false;
  bool setting2_below_separation = false;

  bool all_hold() const {
    return uncoordinated_below_coordinated && setting1_below_setting2 && setting2_below_separation;
  }
};

/// Engine costs of both settings with and without jammer coordination, and
/// the setting-2 separation baseline. Throws NoAdversaries when K = 0.
CoordinationReport coordination_report(const NetworkConfig& cfg);

}  // namespace gsn
