// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/analytics.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "overloaded.hpp"

namespace gsn {
namespace {

void require_transmitters(const NetworkConfig& cfg) {
  validate_config(cfg);
  if (cfg.M < 1) throw Error(ErrorCode::RequiresTransmitters, "closed form needs M >= 1");
}

double alpha_T_squared(const NetworkConfig& cfg) {
  const double a = optimal_gains(cfg).alpha_T;
  return a * a;
}

double to_units(double nats, Units units) {
  return units == Units::Bits ? nats / std::numbers::ln2 : nats;
}

double from_units(double value, Units units) {
  return units == Units::Bits ? value * std::numbers::ln2 : value;
}

SecondOrderStats branch_stats(const StrategyProfile& profile, const NetworkConfig& cfg, int sign) {
  const double a = transmitter_gain(profile.transmitter);
  const double lambda = adversary_gain(profile.adversary);
  const AdversaryNoise noise = adversary_noise(profile.adversary, cfg);
  const double M = cfg.M;
  const double K = cfg.K;
  const double share = noise.coordinated ? K * K : K;

  const double coherent = sign * M * a + K * lambda;
  SecondOrderStats stats;
  stats.e_ss = cfg.var_S;
  stats.e_sy = coherent * cfg.var_S;
  stats.e_yy = coherent * coherent * cfg.var_S + M * a * a * cfg.var_WT +
               K * lambda * lambda * cfg.var_WA + share * noise.variance + cfg.var_Z;
  stats.conditioned_on_sign = sign;
  return stats;
}

// A present sensor with zero observation noise reveals S exactly.
bool has_noiseless_sensor(const NetworkConfig& cfg) {
  return (cfg.M > 0 && cfg.var_WT == 0.0) || (cfg.K > 0 && cfg.var_WA == 0.0);
}

void require_ceo(const NetworkConfig& cfg) {
  validate_config(cfg);
  if (cfg.M + cfg.K < 1) throw Error(ErrorCode::DegenerateCEO, "CEO problem needs M + K >= 1");
}

double d_est_engine(const NetworkConfig& cfg) {
  if (cfg.var_S == 0.0 || has_noiseless_sensor(cfg)) return 0.0;
  // Rank-one update of the (M+K)-dim LMMSE: the error precision is the prior
  // precision plus the sum of per-sensor noise precisions.
  double precision = 0.0;
  if (cfg.M > 0) precision += cfg.M / cfg.var_WT;
  if (cfg.K > 0) precision += cfg.K / cfg.var_WA;
  return cfg.var_S / (1.0 + cfg.var_S * precision);
}

}  // namespace

Gains optimal_gains(const NetworkConfig& cfg) {
  validate_config(cfg);
  const double obs_T = cfg.var_S + cfg.var_WT;
  const double obs_A = cfg.var_S + cfg.var_WA;
  if (!(obs_T > 0.0)) throw Error(ErrorCode::DegenerateObservation, "var_S + var_WT must be > 0");
  if (!(obs_A > 0.0)) throw Error(ErrorCode::DegenerateObservation, "var_S + var_WA must be > 0");
  return {std::sqrt(cfg.P_T / obs_T), -std::sqrt(cfg.P_A / obs_A)};
}

StrategyProfile setting1_profile(const NetworkConfig& cfg) {
  const Gains g = optimal_gains(cfg);
  return {RandomizedSign{g.alpha_T, 0.5}, CoordinatedNoise{cfg.P_A},
          ReceiverStrategy{MMSEFromStats{}, true}};
}

StrategyProfile setting1_uncoordinated_profile(const NetworkConfig& cfg) {
  const Gains g = optimal_gains(cfg);
  return {RandomizedSign{g.alpha_T, 0.5}, IndependentNoise{cfg.P_A},
          ReceiverStrategy{MMSEFromStats{}, true}};
}

StrategyProfile setting2_profile(const NetworkConfig& cfg) {
  const Gains g = optimal_gains(cfg);
  return {DeterministicLinear{g.alpha_T}, LinearPlusNoise{g.alpha_A, false},
          ReceiverStrategy{MMSEFromStats{}, false}};
}

SecondOrderStats second_order_stats(const StrategyProfile& profile, const NetworkConfig& cfg,
                                    std::optional<int> sign) {
  check_feasible(profile, cfg);
  if (sign && *sign != 1 && *sign != -1) {
    throw Error(ErrorCode::InvalidArgument, "sign must be +1 or -1");
  }
  if (std::holds_alternative<DeterministicLinear>(profile.transmitter)) {
    auto stats = branch_stats(profile, cfg, 1);
    stats.conditioned_on_sign = sign;
    return stats;
  }
  if (sign) return branch_stats(profile, cfg, *sign);

  const double p = sign_probability(profile.transmitter);
  const auto plus = branch_stats(profile, cfg, 1);
  const auto minus = branch_stats(profile, cfg, -1);
  SecondOrderStats mixed;
  mixed.e_ss = cfg.var_S;
  mixed.e_sy = p * plus.e_sy + (1.0 - p) * minus.e_sy;
  mixed.e_yy = p * plus.e_yy + (1.0 - p) * minus.e_yy;
  return mixed;
}

MmseResult mmse_from_stats(const SecondOrderStats& stats) {
  if (!(stats.e_yy > 0.0)) throw Error(ErrorCode::ZeroObservationPower, "E{Y^2} must be > 0");
  const double gain = stats.e_sy / stats.e_yy;
  const double mse = stats.e_ss - stats.e_sy * gain;
  return {gain, std::clamp(mse, 0.0, stats.e_ss)};
}

double linear_mse(const SecondOrderStats& stats, double gain) {
  return stats.e_ss - 2.0 * gain * stats.e_sy + gain * gain * stats.e_yy;
}

std::vector<SignBranch> sign_branches(const StrategyProfile& profile, const NetworkConfig& cfg) {
  check_feasible(profile, cfg);
  if (std::holds_alternative<DeterministicLinear>(profile.transmitter)) {
    return {SignBranch{1.0, 1, branch_stats(profile, cfg, 1)}};
  }
  const double p = sign_probability(profile.transmitter);
  return {SignBranch{p, 1, branch_stats(profile, cfg, 1)},
          SignBranch{1.0 - p, -1, branch_stats(profile, cfg, -1)}};
}

std::vector<double> receiver_gains(const StrategyProfile& profile, const NetworkConfig& cfg) {
  const auto branches = sign_branches(profile, cfg);
  std::vector<double> gains;
  gains.reserve(branches.size());
  const bool knows_sign = profile.receiver.knows_sign;
  std::visit(detail::Overloaded{
                 [&](const FixedLinear& fixed) {
                   for (const auto& b : branches) gains.push_back(knows_sign ? b.sign * fixed.gain : fixed.gain);
                 },
                 [&](const MMSEFromStats&) {
                   if (knows_sign) {
                     for (const auto& b : branches) gains.push_back(mmse_from_stats(b.stats).gain);
                   } else {
                     const double g = mmse_from_stats(second_order_stats(profile, cfg)).gain;
                     gains.assign(branches.size(), g);
                   }
                 }},
             profile.receiver.rule);
  return gains;
}

double profile_cost_with_gains(const StrategyProfile& profile, const NetworkConfig& cfg,
                               const std::vector<double>& gains) {
  const auto branches = sign_branches(profile, cfg);
  if (gains.size() != branches.size()) {
    throw Error(ErrorCode::InvalidArgument,
                fmt::format("expected {} receiver gains, got {}", branches.size(), gains.size()));
  }
  double cost = 0.0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    if (branches[i].weight == 0.0) continue;
    cost += branches[i].weight * linear_mse(branches[i].stats, gains[i]);
  }
  return cost;
}

double profile_cost(const StrategyProfile& profile, const NetworkConfig& cfg) {
  return profile_cost_with_gains(profile, cfg, receiver_gains(profile, cfg));
}

double cost_setting1_literal(const NetworkConfig& cfg) {
  require_transmitters(cfg);
  const double M = cfg.M;
  const double K = cfg.K;
  const double a2 = alpha_T_squared(cfg);
  const double noise = M * M * a2 * cfg.var_WT + K * K * cfg.P_A + cfg.var_Z;
  return cfg.var_S * noise / (M * a2 * cfg.var_S + noise);
}

double cost_setting1_engine(const NetworkConfig& cfg) {
  require_transmitters(cfg);
  return profile_cost(setting1_profile(cfg), cfg);
}

CostReport cost_setting1_uncoordinated(const NetworkConfig& cfg) {
  require_transmitters(cfg);
  const double M = cfg.M;
  const double K = cfg.K;
  const double a2 = alpha_T_squared(cfg);
  const double noise = M * M * a2 * cfg.var_WT + K * cfg.P_A + cfg.var_Z;
  CostReport report;
  report.paper_literal = cfg.var_S * noise / (M * a2 * cfg.var_S + noise);
  report.engine = profile_cost(setting1_uncoordinated_profile(cfg), cfg);
  report.discrepancy = std::abs(report.paper_literal - report.engine);
  return report;
}

CostReport cost_setting2(const NetworkConfig& cfg) {
  require_transmitters(cfg);
  const double M = cfg.M;
  const double K = cfg.K;
  const Gains g = optimal_gains(cfg);
  const double noise = M * M * g.alpha_T * g.alpha_T * cfg.var_WT +
                       K * K * g.alpha_A * g.alpha_A * cfg.var_WA + cfg.var_Z;
  CostReport report;
  report.paper_literal = cfg.var_S * noise / ((M * g.alpha_T + K * g.alpha_A) * cfg.var_S + noise);
  report.engine = profile_cost(setting2_profile(cfg), cfg);
  report.discrepancy = std::abs(report.paper_literal - report.engine);
  return report;
}

double ceo_sigma_T2(const NetworkConfig& cfg) {
  require_ceo(cfg);
  if (cfg.var_S == 0.0) return 0.0;
  if (has_noiseless_sensor(cfg)) return cfg.var_S;
  const double inner_den = cfg.var_S * (cfg.K * cfg.var_WT + cfg.M * cfg.var_WA);
  if (inner_den > 0.0) {
    return cfg.var_S / (1.0 + cfg.var_WA * cfg.var_WT / inner_den);
  }
  // The reference form is 0/0 here (e.g. K = 0 with var_WA = 0); use the orthogonal split.
  return cfg.var_S - d_est_engine(cfg);
}

CostReport ceo_estimation_error(const NetworkConfig& cfg) {
  require_ceo(cfg);
  CostReport report;
  const double den = cfg.K * cfg.var_WT + cfg.M * cfg.var_WA + cfg.var_WT * cfg.var_WA;
  report.paper_literal = den > 0.0 ? cfg.var_S * cfg.var_WT * cfg.var_WA / den : 0.0;
  report.engine = d_est_engine(cfg);
  report.discrepancy = std::abs(report.paper_literal - report.engine);
  return report;
}

double ceo_rate(double sigma_T2, double D_rd, Units units) {
  if (!(D_rd > 0.0) || !(D_rd <= sigma_T2)) {
    throw Error(ErrorCode::RateDomain,
                fmt::format("need 0 < D_rd <= sigma_T2, got D_rd={:.17g}, sigma_T2={:.17g}", D_rd, sigma_T2));
  }
  return to_units(0.5 * std::log(sigma_T2 / D_rd), units);
}

double ceo_distortion_at_rate(double sigma_T2, double R, Units units) {
  if (!(R >= 0.0)) throw Error(ErrorCode::RateDomain, "rate must be >= 0");
  if (!(sigma_T2 >= 0.0)) throw Error(ErrorCode::RateDomain, "sigma_T2 must be >= 0");
  if (std::isinf(R)) return 0.0;
  return sigma_T2 * std::exp(-2.0 * from_units(R, units));
}

double total_ceo_distortion(const NetworkConfig& cfg, double R, Units units) {
  return ceo_distortion_at_rate(ceo_sigma_T2(cfg), R, units) + ceo_estimation_error(cfg).engine;
}

CorrMatrix::CorrMatrix(Eigen::MatrixXd values) : values_(std::move(values)) {
  if (values_.rows() != values_.cols()) throw Error(ErrorCode::NotPSD, "matrix is not square");
  if (values_.size() == 0) return;
  if (!values_.allFinite()) throw Error(ErrorCode::NotPSD, "matrix has non-finite entries");
  const double scale = std::max(1.0, values_.cwiseAbs().maxCoeff());
  if ((values_ - values_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw Error(ErrorCode::NotPSD, "matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(values_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-9 * scale) {
    throw Error(ErrorCode::NotPSD,
                fmt::format("smallest eigenvalue {:.3g} is negative", solver.eigenvalues().minCoeff()));
  }
}

CorrMatrix corr_matrix(const StrategyProfile& profile, const NetworkConfig& cfg) {
  check_feasible(profile, cfg);
  const int M = cfg.M;
  const int K = cfg.K;
  const double a = transmitter_gain(profile.transmitter);
  const double mean_sign = 2.0 * sign_probability(profile.transmitter) - 1.0;
  const double lambda = adversary_gain(profile.adversary);
  const AdversaryNoise noise = adversary_noise(profile.adversary, cfg);

  Eigen::MatrixXd R = Eigen::MatrixXd::Zero(M + K, M + K);
  for (int p = 0; p < M + K; ++p) {
    for (int r = 0; r < M + K; ++r) {
      const bool same = p == r;
      if (p < M && r < M) {
        R(p, r) = a * a * (cfg.var_S + (same ? cfg.var_WT : 0.0));
      } else if (p >= M && r >= M) {
        R(p, r) = lambda * lambda * (cfg.var_S + (same ? cfg.var_WA : 0.0)) +
                  ((same || noise.coordinated) ? noise.variance : 0.0);
      } else {
        R(p, r) = mean_sign * a * lambda * cfg.var_S;
      }
    }
  }
  return CorrMatrix(std::move(R));
}

void check_corr_budgets(const CorrMatrix& R, const NetworkConfig& cfg) {
  if (R.size() != cfg.M + cfg.K) {
    throw Error(ErrorCode::InvalidArgument, "matrix size does not match M + K");
  }
  for (Eigen::Index i = 0; i < R.size(); ++i) {
    const double budget = i < cfg.M ? cfg.P_T : cfg.P_A;
    if (R.values()(i, i) > budget + kPowerRelTol * std::max(1.0, budget)) {
      throw Error(ErrorCode::InfeasiblePower, fmt::format("sensor {} power exceeds its budget", i));
    }
  }
}

double mac_mi_bound(const CorrMatrix& R, double var_Z, Units units) {
  if (!(var_Z > 0.0)) throw Error(ErrorCode::NonPositiveChannelNoise, "var_Z must be > 0");
  return to_units(0.5 * std::log1p(R.coherent_power() / var_Z), units);
}

double separation_capacity(const NetworkConfig& cfg, int setting) {
  require_transmitters(cfg);
  double jamming = 0.0;
  if (setting == 1) {
    jamming = static_cast<double>(cfg.K) * cfg.K * cfg.P_A;
  } else if (setting == 2) {
    const double alpha_A = optimal_gains(cfg).alpha_A;
    jamming = cfg.K * alpha_A * alpha_A * (cfg.var_S + cfg.var_WA);
  } else {
    throw Error(ErrorCode::InvalidArgument, "setting must be 1 or 2");
  }
  return 0.5 * std::log1p(cfg.M * cfg.P_T / (cfg.var_Z + jamming));
}

double separation_baseline(const NetworkConfig& cfg, int setting) {
  const double capacity = separation_capacity(cfg, setting);
  NetworkConfig transmitters_only = cfg;
  transmitters_only.K = 0;
  return total_ceo_distortion(transmitters_only, capacity, Units::Nats);
}

}  // namespace gsn
