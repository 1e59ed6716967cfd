// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/format.h>

#include "gsn/analytics.hpp"
#include "overloaded.hpp"

namespace gsn {
namespace {

constexpr double kTieRelTol = 1e-12;

bool ties(double a, double b) {
  return std::abs(a - b) <= kTieRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

void locate_extrema(SweepResult& result) {
  const SweepRow* best_max = nullptr;
  const SweepRow* best_min = nullptr;
  for (const auto& row : result.rows) {
    if (!best_max || (ties(row.analytic_cost, best_max->analytic_cost) ? row.param < best_max->param
                                                                       : row.analytic_cost > best_max->analytic_cost)) {
      best_max = &row;
    }
    if (!best_min || (ties(row.analytic_cost, best_min->analytic_cost) ? row.param < best_min->param
                                                                       : row.analytic_cost < best_min->analytic_cost)) {
      best_min = &row;
    }
  }
  result.argmax_param = best_max->param;
  result.argmin_param = best_min->param;
}

void validate_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw Error(ErrorCode::InvalidGrid, "grid is empty");
  std::set<double> seen;
  for (double v : grid) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidGrid, "grid contains a non-finite value");
    if (!seen.insert(v).second) throw Error(ErrorCode::InvalidGrid, fmt::format("duplicate grid value {}", v));
  }
}

// Profile evaluated at one grid point of the sweep (for BernoulliP, with the
// jammer sign that maximizes the cost).
StrategyProfile profile_at(const SweepSpec& spec, double param, double* cost) {
  StrategyProfile profile = spec.fixed_profile;
  switch (spec.side) {
    case SweptSide::Transmitter:
      std::visit([&](auto& t) { t.gain = param; }, profile.transmitter);
      *cost = profile_cost(profile, spec.cfg);
      return profile;
    case SweptSide::Adversary: {
      auto* lin = std::get_if<LinearPlusNoise>(&profile.adversary);
      if (!lin) throw Error(ErrorCode::InvalidArgument, "adversary sweep needs a LinearPlusNoise adversary");
      lin->gain = param;
      *cost = profile_cost(profile, spec.cfg);
      return profile;
    }
    case SweptSide::BernoulliP: {
      auto* tx = std::get_if<RandomizedSign>(&profile.transmitter);
      if (!tx) throw Error(ErrorCode::InvalidArgument, "Bernoulli sweep needs a RandomizedSign transmitter");
      if (!(param >= 0.0 && param <= 1.0)) throw Error(ErrorCode::InvalidGrid, "p must lie in [0, 1]");
      tx->p = param;
      auto* lin = std::get_if<LinearPlusNoise>(&profile.adversary);
      if (!lin) {
        *cost = profile_cost(profile, spec.cfg);
        return profile;
      }
      StrategyProfile flipped = profile;
      std::get<LinearPlusNoise>(flipped.adversary).gain = -lin->gain;
      const double given = profile_cost(profile, spec.cfg);
      const double other = profile_cost(flipped, spec.cfg);
      *cost = std::max(given, other);
      // On a tie keep the caller's sign.
      return (other > given && !ties(other, given)) ? flipped : profile;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown sweep side");
}

std::vector<AdversaryStrategy> adversary_family(const NetworkConfig& cfg, int points) {
  std::vector<AdversaryStrategy> family;
  const double limit = max_adversary_gain(cfg);
  for (double g : default_grid(-limit, limit, points)) {
    family.emplace_back(LinearPlusNoise{g, true});
    family.emplace_back(LinearPlusNoise{g, false});
  }
  for (double v : default_grid(0.0, cfg.P_A, points)) {
    family.emplace_back(CoordinatedNoise{v});
    family.emplace_back(IndependentNoise{v});
  }
  return family;
}

double adversary_param(const AdversaryStrategy& s) {
  return std::visit(detail::Overloaded{[](const CoordinatedNoise& n) { return n.variance; },
                                       [](const IndependentNoise& n) { return n.variance; },
                                       [](const LinearPlusNoise& l) { return l.gain; }},
                    s);
}

SaddleReport verify_setting1(const NetworkConfig& cfg, const SaddleOptions& opt, const StrategyProfile& candidate) {
  SaddleReport report;
  report.setting = 1;
  report.tolerance = opt.tolerance;
  report.J_star = profile_cost(candidate, cfg);
  const auto held = receiver_gains(candidate, cfg);

  report.max_lhs_violation = -INFINITY;
  for (const auto& deviation : adversary_family(cfg, opt.grid_points)) {
    StrategyProfile p = candidate;
    p.adversary = deviation;
    const double v = profile_cost_with_gains(p, cfg, held) - report.J_star;
    if (v > report.max_lhs_violation) {
      report.max_lhs_violation = v;
      report.worst_adversary = describe(deviation);
      report.worst_adversary_param = adversary_param(deviation);
    }
  }

  report.max_rhs_violation = -INFINITY;
  const double alpha_T = optimal_gains(cfg).alpha_T;
  for (double gain : default_grid(-alpha_T, alpha_T, opt.grid_points)) {
    for (double p : default_grid(0.0, 1.0, opt.grid_points)) {
      StrategyProfile dev = candidate;
      dev.transmitter = RandomizedSign{gain, p};
      dev.receiver = ReceiverStrategy{MMSEFromStats{}, true};
      const double v = report.J_star - profile_cost(dev, cfg);
      if (v > report.max_rhs_violation) {
        report.max_rhs_violation = v;
        report.worst_transmitter_param = gain;
        report.worst_transmitter_p = p;
      }
    }
  }
  return report;
}

SaddleReport verify_setting2(const NetworkConfig& cfg, const SaddleOptions& opt, const StrategyProfile& candidate) {
  SaddleReport report;
  report.setting = 2;
  report.tolerance = opt.tolerance;
  report.J_star = profile_cost(candidate, cfg);
  const auto family = adversary_family(cfg, opt.grid_points);
  const ReceiverStrategy reoptimized{MMSEFromStats{}, false};

  report.max_lhs_violation = -INFINITY;
  for (const auto& deviation : family) {
    StrategyProfile p = candidate;
    p.adversary = deviation;
    p.receiver = reoptimized;
    const double v = profile_cost(p, cfg) - report.J_star;
    if (v > report.max_lhs_violation) {
      report.max_lhs_violation = v;
      report.worst_adversary = describe(deviation);
      report.worst_adversary_param = adversary_param(deviation);
    }
  }

  report.max_rhs_violation = -INFINITY;
  const double alpha_T = optimal_gains(cfg).alpha_T;
  for (double gain : default_grid(-alpha_T, alpha_T, opt.grid_points)) {
    double follower = -INFINITY;
    for (const auto& response : family) {
      StrategyProfile p{DeterministicLinear{gain}, response, reoptimized};
      follower = std::max(follower, profile_cost(p, cfg));
    }
    const double v = report.J_star - follower;
    if (v > report.max_rhs_violation) {
      report.max_rhs_violation = v;
      report.worst_transmitter_param = gain;
    }
  }
  return report;
}

}  // namespace

std::vector<double> default_grid(double lo, double hi, int points) {
  if (!(lo <= hi) || points < 1) throw Error(ErrorCode::InvalidGrid, "need lo <= hi and points >= 1");
  if (lo == hi || points == 1) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double steps = points - 1;
  // Written so that a grid symmetric about 0 is exactly antisymmetric.
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = lo * ((steps - i) / steps) + hi * (i / steps);
  }
  return grid;
}

double max_adversary_gain(const NetworkConfig& cfg) {
  return -optimal_gains(cfg).alpha_A;
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate_config(spec.cfg);
  validate_grid(spec.grid);
  SweepResult result;
  result.rows.reserve(spec.grid.size());
  for (double param : spec.grid) {
    SweepRow row;
    row.param = param;
    const StrategyProfile profile = profile_at(spec, param, &row.analytic_cost);
    if (spec.mc.mc_n > 0) {
      const SimResult sim = simulate(profile, spec.cfg, spec.mc.mc_n, spec.mc.seed, spec.mc.sim);
      row.mc_cost = sim.mean_cost;
      row.mc_stderr = sim.stderr;
    }
    result.rows.push_back(row);
  }
  locate_extrema(result);
  return result;
}

SweepResult sweep_adversary_setting1(const NetworkConfig& cfg, const std::vector<double>& grid,
                                     const McOptions& mc) {
  SweepSpec spec;
  spec.side = SweptSide::Adversary;
  spec.grid = grid;
  spec.cfg = cfg;
  spec.mc = mc;
  spec.fixed_profile = setting1_profile(cfg);
  spec.fixed_profile.adversary = LinearPlusNoise{0.0, true};
  return run_sweep(spec);
}

SweepResult sweep_adversary_setting2(const NetworkConfig& cfg, const std::vector<double>& grid,
                                     const McOptions& mc) {
  SweepSpec spec;
  spec.side = SweptSide::Adversary;
  spec.grid = grid;
  spec.cfg = cfg;
  spec.mc = mc;
  spec.fixed_profile = setting2_profile(cfg);
  spec.fixed_profile.adversary = LinearPlusNoise{0.0, false};
  return run_sweep(spec);
}

SweepResult sweep_bernoulli_p(const NetworkConfig& cfg, const std::vector<double>& grid, double lambda,
                              const McOptions& mc) {
  SweepSpec spec;
  spec.side = SweptSide::BernoulliP;
  spec.grid = grid;
  spec.cfg = cfg;
  spec.mc = mc;
  spec.fixed_profile = setting1_profile(cfg);
  spec.fixed_profile.adversary = LinearPlusNoise{lambda, true};
  return run_sweep(spec);
}

SaddleReport verify_saddle(const NetworkConfig& cfg, int setting, const SaddleOptions& options) {
  validate_config(cfg);
  if (cfg.M < 1) throw Error(ErrorCode::RequiresTransmitters, "saddle check needs M >= 1");
  if (options.grid_points < 2) throw Error(ErrorCode::InvalidGrid, "grid_points must be >= 2");
  SaddleReport report;
  if (setting == 1) {
    report = verify_setting1(cfg, options, options.candidate.value_or(setting1_profile(cfg)));
  } else if (setting == 2) {
    report = verify_setting2(cfg, options, options.candidate.value_or(setting2_profile(cfg)));
  } else {
    throw Error(ErrorCode::InvalidArgument, "setting must be 1 or 2");
  }
  report.passed = report.max_lhs_violation <= options.tolerance && report.max_rhs_violation <= options.tolerance;
  return report;
}

CoordinationReport coordination_report(const NetworkConfig& cfg) {
  validate_config(cfg);
  if (cfg.K < 1) throw Error(ErrorCode::NoAdversaries, "coordination report needs K >= 1");
  CoordinationReport r;
  r.setting1_coordinated = cost_setting1_engine(cfg);
  r.setting1_uncoordinated = cost_setting1_uncoordinated(cfg).engine;
  r.setting2 = cost_setting2(cfg).engine;
  r.separation = separation_baseline(cfg, 2);

  r.uncoordinated_below_coordinated = cfg.K >= 2 && cfg.P_A > 0.0
                                          ? r.setting1_uncoordinated < r.setting1_coordinated
                                          : ties(r.setting1_uncoordinated, r.setting1_coordinated);
  r.setting1_below_setting2 = cfg.P_A > 0.0 ? r.setting1_coordinated < r.setting2
                                            : ties(r.setting1_coordinated, r.setting2);
  r.setting2_below_separation = r.setting2 < r.separation;
  return r;
}

}  // namespace gsn
