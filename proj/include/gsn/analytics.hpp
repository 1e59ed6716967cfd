// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gsn/model.hpp"

namespace gsn {

enum class Units { Nats, Bits };

/// Moments of the scalar channel output Y against the source S. When
/// conditioned_on_sign is set, the moments are conditional on the shared
/// transmitter sign gamma taking that value.
struct SecondOrderStats {
  double e_sy = 0.0;
  double e_yy = 0.0;
  double e_ss = 0.0;
  std::optional<int> conditioned_on_sign;
};

/// A reference closed form next to the value produced by the
/// second-order engine. The two are not always equal; see README.
struct CostReport {
  double paper_literal = 0.0;
  double engine = 0.0;
  double discrepancy = 0.0;
};

struct Gains {
  double alpha_T = 0.0;
  double alpha_A = 0.0;
};

struct MmseResult {
  double gain = 0.0;
  double mse = 0.0;
};

/// One realization of the transmitter sign with its probability.
struct SignBranch {
  double weight = 1.0;
  int sign = 1;
  SecondOrderStats stats;
};

// --- strategy gains and saddle profiles ----------------------------------

/// alpha_T = sqrt(P_T / (var_S + var_WT)), alpha_A = -sqrt(P_A / (var_S + var_WA)).
Gains optimal_gains(const NetworkConfig& cfg);

/// Randomized uncoded transmitters, coordinated Gaussian jammer, sign-aware
/// MMSE receiver.
StrategyProfile setting1_profile(const NetworkConfig& cfg);

/// Same as setting1_profile but each jammer draws its own noise.
StrategyProfile setting1_uncoordinated_profile(const NetworkConfig& cfg);

/// Deterministic linear transmitters, opposite-sign linear jammers, MMSE receiver.
StrategyProfile setting2_profile(const NetworkConfig& cfg);

// --- second-order engine -------------------------------------------------

/// Exact moments of Y for the profile. For a RandomizedSign transmitter with
/// no sign given, the moments are the p-weighted mixture over gamma.
SecondOrderStats second_order_stats(const StrategyProfile& profile, const NetworkConfig& cfg,
                                    std::optional<int> sign = std::nullopt);

MmseResult mmse_from_stats(const SecondOrderStats& stats);

/// E{(S - g Y)^2} for a fixed linear gain g.
double linear_mse(const SecondOrderStats& stats, double gain);

/// One branch for deterministic transmitters, two (gamma = +1, -1) otherwise.
std::vector<SignBranch> sign_branches(const StrategyProfile& profile, const NetworkConfig& cfg);

/// Gain the profile's receiver applies to Y in each branch, in the order
/// returned by sign_branches.
std::vector<double> receiver_gains(const StrategyProfile& profile, const NetworkConfig& cfg);

/// Expected MSE of the profile: the weighted average of the per-branch MSEs
/// under the receiver's gains.
double profile_cost(const StrategyProfile& profile, const NetworkConfig& cfg);

/// As profile_cost, but the receiver gains are supplied explicitly (one per
/// branch). Used to hold a receiver fixed while another player deviates.
double profile_cost_with_gains(const StrategyProfile& profile, const NetworkConfig& cfg,
                               const std::vector<double>& gains);

// --- closed forms --------------------------------------------------------

/// Setting-1 saddle cost, reference closed form.
double cost_setting1_literal(const NetworkConfig& cfg);

/// Setting-1 saddle cost from the engine:
/// var_S (M a^2 var_WT + K^2 P_A + var_Z) / (M^2 a^2 var_S + M a^2 var_WT + K^2 P_A + var_Z).
double cost_setting1_engine(const NetworkConfig& cfg);

/// Setting 1 with uncoordinated jammers (total jamming variance K P_A).
CostReport cost_setting1_uncoordinated(const NetworkConfig& cfg);

/// Setting-2 cost, reference closed form versus the engine.
CostReport cost_setting2(const NetworkConfig& cfg);

// --- Gaussian CEO quantities ---------------------------------------------

/// Variance of T = E{S | U}.
double ceo_sigma_T2(const NetworkConfig& cfg);

/// D_est = E{(S - T)^2}; reference closed form versus the LMMSE value.
CostReport ceo_estimation_error(const NetworkConfig& cfg);

/// R = 1/2 log(sigma_T2 / D_rd).
double ceo_rate(double sigma_T2, double D_rd, Units units = Units::Nats);

/// Inverse of ceo_rate: sigma_T2 * exp(-2R) (R in the given units).
double ceo_distortion_at_rate(double sigma_T2, double R, Units units = Units::Nats);

/// D = D_rd(R) + D_est.
double total_ceo_distortion(const NetworkConfig& cfg, double R, Units units = Units::Nats);

// --- channel side --------------------------------------------------------

/// Correlation matrix of the M+K channel inputs, E{X_p X_r}.
class CorrMatrix {
 public:
  /// Throws NotPSD if the matrix is not square, not symmetric, or has an
  /// eigenvalue below -1e-9 (relative to its scale).
  explicit CorrMatrix(Eigen::MatrixXd values);

  const Eigen::MatrixXd& values() const noexcept { return values_; }
  Eigen::Index size() const noexcept { return values_.rows(); }

  /// Sum of all entries, 1^T R 1.
  double coherent_power() const { return values_.sum(); }

 private:
  Eigen::MatrixXd values_;
};

/// R_X for a profile: transmitters first, then adversaries. For randomized
/// transmitters the matrix is the sign average.
CorrMatrix corr_matrix(const StrategyProfile& profile, const NetworkConfig& cfg);

/// Throws InfeasiblePower if a diagonal entry exceeds its sensor's budget.
void check_corr_budgets(const CorrMatrix& R, const NetworkConfig& cfg);

/// 1/2 log(1 + 1^T R_X 1 / var_Z).
double mac_mi_bound(const CorrMatrix& R, double var_Z, Units units = Units::Nats);

/// Distortion reachable by digital compress-then-transmit: the M-sensor CEO
/// distortion at the MAC sum capacity 1/2 log(1 + M P_T / (var_Z + J)),
/// where J = K^2 P_A in setting 1 (coordinated jamming) and
/// J = K alpha_A^2 (var_S + var_WA) in setting 2 (incoherent jamming).
double separation_baseline(const NetworkConfig& cfg, int setting);

/// Sum capacity used by separation_baseline, in nats.
double separation_capacity(const NetworkConfig& cfg, int setting);

}  // namespace gsn
