// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "gsn/analytics.hpp"
#include "gsn/error.hpp"
#include "gsn/game.hpp"
#include "support.hpp"

using namespace gsn;
using namespace gsn::testing;
using doctest::Approx;

namespace {

const double kRootHalf = std::sqrt(0.5);

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected gsn::Error");
  return ErrorCode::InvalidArgument;
}

double cost_at(const SweepResult& r, double param) {
  for (const auto& row : r.rows) {
    if (row.param == param) return row.analytic_cost;
  }
  FAIL("parameter not on the grid");
  return NAN;
}

}  // namespace

TEST_CASE("default grid") {
  const auto g = default_grid(-1.0, 1.0, 5);
  CHECK(g == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
  CHECK(default_grid(0.3, 0.3, 41) == std::vector<double>{0.3});
  CHECK(default_grid(0.0, 1.0, 1) == std::vector<double>{0.0});

  const auto sym = default_grid(-kRootHalf, kRootHalf, 41);
  for (std::size_t i = 0; i < sym.size(); ++i) CHECK(sym[i] == -sym[sym.size() - 1 - i]);
  CHECK(sym.front() == -kRootHalf);
  CHECK(sym.back() == kRootHalf);

  CHECK(code_of([] { default_grid(1.0, 0.0, 3); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([] { default_grid(0.0, 1.0, 0); }) == ErrorCode::InvalidGrid);
}

TEST_CASE("setting 1 jammer sweep peaks at zero gain") {
  const NetworkConfig c = config_a();
  const SweepResult r = sweep_adversary_setting1(c, {-0.7, -0.35, 0.0, 0.35, 0.7});
  REQUIRE(r.rows.size() == 5);
  CHECK(std::abs(cost_at(r, 0.7) - cost_at(r, -0.7)) <= 1e-12);
  CHECK(std::abs(cost_at(r, 0.35) - cost_at(r, -0.35)) <= 1e-12);
  CHECK(cost_at(r, 0.0) == Approx(0.6).epsilon(1e-12));
  CHECK(r.argmax_param == 0.0);
  // Equal costs at +-0.7: the tie goes to the smaller parameter.
  CHECK(r.argmin_param == -0.7);
  CHECK_FALSE(r.rows.front().mc_cost.has_value());
}

TEST_CASE("setting 2 jammer sweep peaks at the anti-aligned gain") {
  const NetworkConfig c = config_a();
  const SweepResult r = sweep_adversary_setting2(c, default_grid(-kRootHalf, kRootHalf, 41));
  CHECK(r.argmax_param == -kRootHalf);
  CHECK(cost_at(r, -kRootHalf) == Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(cost_at(r, kRootHalf) < cost_at(r, -kRootHalf));
}

TEST_CASE("Bernoulli sweep is minimized by a fair coin") {
  const NetworkConfig c = config_a();
  const SweepResult r = sweep_bernoulli_p(c, {0.0, 0.25, 0.5, 0.75, 1.0}, -0.5);
  CHECK(r.argmin_param == 0.5);
  CHECK(cost_at(r, 0.0) == Approx(cost_at(r, 1.0)).epsilon(1e-12));
  // The worst jammer sign makes p and 1 - p equivalent.
  CHECK(cost_at(r, 0.25) == Approx(cost_at(r, 0.75)).epsilon(1e-12));

  const SweepResult flat = sweep_bernoulli_p(c, default_grid(0.0, 1.0, 11), 0.0);
  for (const auto& row : flat.rows) CHECK(std::abs(row.analytic_cost - flat.rows.front().analytic_cost) <= 1e-12);

  CHECK(code_of([&] { sweep_bernoulli_p(c, {0.5, 1.5}, -0.5); }) == ErrorCode::InvalidGrid);
}

TEST_CASE("transmitter-side sweep through run_sweep") {
  const NetworkConfig c = config_a();
  SweepSpec spec;
  spec.side = SweptSide::Transmitter;
  spec.cfg = c;
  spec.grid = default_grid(-kRootHalf, kRootHalf, 21);
  spec.fixed_profile = setting2_profile(c);
  const SweepResult r = run_sweep(spec);
  CHECK(cost_at(r, kRootHalf) == Approx(5.0 / 6.0).epsilon(1e-12));
  // Flipping the transmitter sign turns the fixed jammer into a helper.
  CHECK(r.argmin_param == -kRootHalf);
  CHECK(cost_at(r, -kRootHalf) == Approx(5.0 / 14.0).epsilon(1e-12));

  spec.side = SweptSide::Adversary;
  spec.fixed_profile = setting1_profile(c);
  CHECK(code_of([&] { run_sweep(spec); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("grids are validated") {
  const NetworkConfig c = config_a();
  CHECK(code_of([&] { sweep_adversary_setting1(c, {}); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([&] { sweep_adversary_setting1(c, {0.1, 0.1}); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([&] { sweep_adversary_setting1(c, {0.1, NAN}); }) == ErrorCode::InvalidGrid);
  CHECK(code_of([&] { sweep_adversary_setting1(c, {0.9}); }) == ErrorCode::InfeasiblePower);
}

TEST_CASE("property: permuting the grid changes neither rows nor extrema") {
  ConfigGenerator gen(8);
  std::mt19937_64 shuffler(8);
  for (int trial = 0; trial < 50; ++trial) {
    const NetworkConfig c = gen();
    const double limit = max_adversary_gain(c);
    auto grid = default_grid(-limit, limit, 17);
    const SweepResult ordered = trial % 2 ? sweep_adversary_setting1(c, grid) : sweep_adversary_setting2(c, grid);
    std::shuffle(grid.begin(), grid.end(), shuffler);
    const SweepResult shuffled = trial % 2 ? sweep_adversary_setting1(c, grid) : sweep_adversary_setting2(c, grid);
    CHECK(ordered.argmax_param == shuffled.argmax_param);
    CHECK(ordered.argmin_param == shuffled.argmin_param);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      CHECK(shuffled.rows[i].param == grid[i]);
      CHECK(shuffled.rows[i].analytic_cost == cost_at(ordered, grid[i]));
    }
  }
}

TEST_CASE("Monte Carlo column tracks the analytic column") {
  const NetworkConfig c = config_a();
  McOptions mc;
  mc.mc_n = 100000;
  mc.seed = 5;
  const SweepResult r = sweep_adversary_setting2(c, default_grid(-kRootHalf, kRootHalf, 5), mc);
  for (const auto& row : r.rows) {
    REQUIRE(row.mc_cost.has_value());
    CHECK(std::abs(*row.mc_cost - row.analytic_cost) <= 3.0 * *row.mc_stderr);
  }
}

TEST_CASE("saddle verification on the reference network") {
  const NetworkConfig c = config_a();
  const SaddleReport s1 = verify_saddle(c, 1);
  CHECK(s1.passed);
  CHECK(s1.J_star == Approx(0.6).epsilon(1e-12));
  CHECK(s1.max_lhs_violation <= 1e-9);
  CHECK(s1.max_rhs_violation <= 1e-9);
  CHECK(s1.scope == "family-restricted verification");

  const SaddleReport s2 = verify_saddle(c, 2);
  CHECK(s2.passed);
  CHECK(s2.J_star == Approx(5.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("an underpowered transmitter fails the setting 2 check") {
  const NetworkConfig c = config_a();
  SaddleOptions opt;
  StrategyProfile weak = setting2_profile(c);
  weak.transmitter = DeterministicLinear{0.9 * kRootHalf};
  opt.candidate = weak;
  const SaddleReport r = verify_saddle(c, 2, opt);
  CHECK_FALSE(r.passed);
  CHECK(r.max_rhs_violation > 0.0);
}

TEST_CASE("counterexample: three jammers against one transmitter break the setting 2 saddle") {
  // The jammers outweigh the transmitter and gain by partially cancelling
  // the signal instead of nulling it at full power.
  const SaddleReport r = verify_saddle(unit_config(1, 3), 2);
  CHECK_FALSE(r.passed);
  CHECK(r.max_lhs_violation > 0.1);
}

TEST_CASE("property: the setting 1 saddle holds on random networks") {
  ConfigGenerator gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const NetworkConfig c = gen();
    const SaddleReport r = verify_saddle(c, 1, SaddleOptions{1e-9, 21, std::nullopt});
    CAPTURE(trial);
    CHECK(r.passed);
  }
}

TEST_CASE("refining the grid keeps a passing verdict") {
  for (const NetworkConfig& c : {config_a(), config_c()}) {
    for (int setting : {1, 2}) {
      const bool coarse = verify_saddle(c, setting, SaddleOptions{1e-9, 41, std::nullopt}).passed;
      const bool fine = verify_saddle(c, setting, SaddleOptions{1e-9, 81, std::nullopt}).passed;
      CHECK(coarse);
      CHECK(fine);
    }
  }
}

TEST_CASE("saddle verification rejects bad input") {
  const NetworkConfig c = config_a();
  CHECK(code_of([&] { verify_saddle(c, 3); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { verify_saddle(unit_config(0, 1), 1); }) == ErrorCode::RequiresTransmitters);
  CHECK(code_of([&] { verify_saddle(c, 1, SaddleOptions{1e-9, 1, std::nullopt}); }) == ErrorCode::InvalidGrid);
}

TEST_CASE("coordination report") {
  const CoordinationReport b = coordination_report(config_b());
  CHECK(b.setting1_uncoordinated == Approx(4.0 / 6.0).epsilon(1e-12));
  CHECK(b.setting1_coordinated == Approx(0.75).epsilon(1e-12));
  CHECK(b.uncoordinated_below_coordinated);
  CHECK(b.setting1_below_setting2);

  const CoordinationReport a = coordination_report(config_a());
  CHECK(a.uncoordinated_below_coordinated);  // equality with one jammer
  CHECK(a.setting1_coordinated == a.setting1_uncoordinated);
  CHECK(a.setting1_below_setting2);
  // Uncoded setting 2 loses to separate coding here.
  CHECK_FALSE(a.setting2_below_separation);
  CHECK_FALSE(a.all_hold());

  CHECK(code_of([] { coordination_report(point_to_point()); }) == ErrorCode::NoAdversaries);
}
