// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/model.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "overloaded.hpp"

namespace gsn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPositiveChannelNoise: return "NonPositiveChannelNoise";
    case ErrorCode::NegativeParameter: return "NegativeParameter";
    case ErrorCode::InfeasiblePower: return "InfeasiblePower";
    case ErrorCode::DegenerateObservation: return "DegenerateObservation";
    case ErrorCode::RequiresTransmitters: return "RequiresTransmitters";
    case ErrorCode::ZeroObservationPower: return "ZeroObservationPower";
    case ErrorCode::DegenerateCEO: return "DegenerateCEO";
    case ErrorCode::RateDomain: return "RateDomain";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::ZeroSamples: return "ZeroSamples";
    case ErrorCode::NoAdversaries: return "NoAdversaries";
    case ErrorCode::InvalidGrid: return "InvalidGrid";
    case ErrorCode::DegenerateCorrelation: return "DegenerateCorrelation";
    case ErrorCode::DegenerateMarginal: return "DegenerateMarginal";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

using detail::Overloaded;

bool within_budget(double power, double budget) {
  return power <= budget + kPowerRelTol * std::max(1.0, std::abs(budget));
}

void require_budget(double power, double budget, const char* who) {
  if (!(within_budget(power, budget))) {
    throw Error(ErrorCode::InfeasiblePower,
                fmt::format("{} power {:.17g} exceeds budget {:.17g}", who, power, budget));
  }
}

}  // namespace

std::string config_violation(const NetworkConfig& cfg) {
  if (!(cfg.var_Z > 0.0)) return "var_Z";
  if (cfg.M < 0) return "M";
  if (cfg.K < 0) return "K";
  struct Field {
    const char* name;
    double value;
  };
  for (auto [name, value] : {Field{"var_S", cfg.var_S}, Field{"var_WT", cfg.var_WT},
                             Field{"var_WA", cfg.var_WA}, Field{"P_T", cfg.P_T},
                             Field{"P_A", cfg.P_A}}) {
    if (!(value >= 0.0) || !std::isfinite(value)) return name;
  }
  if (!std::isfinite(cfg.var_Z)) return "var_Z";
  return {};
}

void validate_config(const NetworkConfig& cfg) {
  auto field = config_violation(cfg);
  if (field.empty()) return;
  if (field == "var_Z" && !(cfg.var_Z > 0.0)) {
    throw Error(ErrorCode::NonPositiveChannelNoise, "var_Z must be > 0");
  }
  throw Error(ErrorCode::NegativeParameter, field + " must be a finite value >= 0");
}

double transmitter_gain(const TransmitterStrategy& s) {
  return std::visit([](const auto& t) { return t.gain; }, s);
}

double sign_probability(const TransmitterStrategy& s) {
  return std::visit(Overloaded{[](const DeterministicLinear&) { return 1.0; },
                               [](const RandomizedSign& r) { return r.p; }},
                    s);
}

double adversary_gain(const AdversaryStrategy& s) {
  if (const auto* lin = std::get_if<LinearPlusNoise>(&s)) return lin->gain;
  return 0.0;
}

double residual_variance(const LinearPlusNoise& s, const NetworkConfig& cfg) {
  const double linear = s.gain * s.gain * (cfg.var_S + cfg.var_WA);
  require_budget(linear, cfg.P_A, "adversary linear");
  return std::max(0.0, cfg.P_A - linear);
}

AdversaryNoise adversary_noise(const AdversaryStrategy& s, const NetworkConfig& cfg) {
  return std::visit(
      Overloaded{[](const CoordinatedNoise& n) { return AdversaryNoise{n.variance, true}; },
                 [](const IndependentNoise& n) { return AdversaryNoise{n.variance, false}; },
                 [&](const LinearPlusNoise& l) {
                   return AdversaryNoise{residual_variance(l, cfg), l.coordinated_residual};
                 }},
      s);
}

double strategy_power(const TransmitterStrategy& s, const NetworkConfig& cfg) {
  validate_config(cfg);
  if (const auto* r = std::get_if<RandomizedSign>(&s); r && !(r->p >= 0.0 && r->p <= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "Bernoulli parameter p must lie in [0, 1]");
  }
  const double g = transmitter_gain(s);
  const double power = g * g * (cfg.var_S + cfg.var_WT);
  require_budget(power, cfg.P_T, "transmitter");
  return power;
}

double strategy_power(const AdversaryStrategy& s, const NetworkConfig& cfg) {
  validate_config(cfg);
  return std::visit(
      Overloaded{[&](const CoordinatedNoise& n) {
                   if (n.variance < 0.0) throw Error(ErrorCode::NegativeParameter, "noise variance");
                   require_budget(n.variance, cfg.P_A, "adversary");
                   return n.variance;
                 },
                 [&](const IndependentNoise& n) {
                   if (n.variance < 0.0) throw Error(ErrorCode::NegativeParameter, "noise variance");
                   require_budget(n.variance, cfg.P_A, "adversary");
                   return n.variance;
                 },
                 [&](const LinearPlusNoise& l) {
                   return l.gain * l.gain * (cfg.var_S + cfg.var_WA) + residual_variance(l, cfg);
                 }},
      s);
}

void check_feasible(const StrategyProfile& profile, const NetworkConfig& cfg) {
  strategy_power(profile.transmitter, cfg);
  strategy_power(profile.adversary, cfg);
}

std::string describe(const TransmitterStrategy& s) {
  return std::visit(
      Overloaded{[](const DeterministicLinear& d) { return fmt::format("linear(gain={:.6g})", d.gain); },
                 [](const RandomizedSign& r) {
                   return fmt::format("randomized(gain={:.6g},p={:.6g})", r.gain, r.p);
                 }},
      s);
}

std::string describe(const AdversaryStrategy& s) {
  return std::visit(
      Overloaded{[](const CoordinatedNoise& n) { return fmt::format("coord-noise(var={:.6g})", n.variance); },
                 [](const IndependentNoise& n) { return fmt::format("indep-noise(var={:.6g})", n.variance); },
                 [](const LinearPlusNoise& l) {
                   return fmt::format("linear(gain={:.6g},{})", l.gain,
                                      l.coordinated_residual ? "coord" : "indep");
                 }},
      s);
}

}  // namespace gsn
