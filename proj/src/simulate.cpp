// Copyright 2026 The gsngame Authors
// SPDX-License-Identifier: Apache-2.0
#include "gsn/simulate.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <span>
#include <thread>
#include <vector>

#include "gsn/analytics.hpp"
#include "gsn/random.hpp"

namespace gsn {
namespace {

// Welford accumulator; merged with Chan's update in a fixed tree order.
struct Moments {
  double count = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    count += 1.0;
    const double delta = x - mean;
    mean += delta / count;
    m2 += delta * (x - mean);
  }

  static Moments merge(const Moments& a, const Moments& b) {
    if (a.count == 0.0) return b;
    if (b.count == 0.0) return a;
    Moments out;
    out.count = a.count + b.count;
    const double delta = b.mean - a.mean;
    out.mean = a.mean + delta * (b.count / out.count);
    out.m2 = a.m2 + b.m2 + delta * delta * (a.count * b.count / out.count);
    return out;
  }

  Estimate estimate() const {
    if (count < 2.0) return {mean, 0.0};
    return {mean, std::sqrt(m2 / (count - 1.0) / count)};
  }
};

enum Quantity : std::size_t { kSquaredError, kPowerT, kPowerA, kCorrSX, kCorrZX, kNumQuantities };
using BlockMoments = std::array<Moments, kNumQuantities>;

BlockMoments merge(const BlockMoments& a, const BlockMoments& b) {
  BlockMoments out;
  for (std::size_t q = 0; q < kNumQuantities; ++q) out[q] = Moments::merge(a[q], b[q]);
  return out;
}

// Pairwise reduction whose shape depends only on the number of blocks.
BlockMoments reduce(std::span<const BlockMoments> blocks) {
  if (blocks.size() == 1) return blocks.front();
  const std::size_t half = blocks.size() / 2;
  return merge(reduce(blocks.first(half)), reduce(blocks.subspan(half)));
}

// Everything a worker needs to regenerate any index of the pipeline.
struct Pipeline {
  int M = 0;
  int K = 0;
  double sd_S = 0.0;
  double sd_WT = 0.0;
  double sd_WA = 0.0;
  double sd_Z = 0.0;
  double tx_gain = 0.0;
  bool randomized = false;
  double p = 1.0;
  double adv_gain = 0.0;
  double sd_adv_noise = 0.0;
  bool coordinated = false;
  double rx_gain_plus = 0.0;
  double rx_gain_minus = 0.0;

  RandomSource source;
  RandomSource tx_noise;
  RandomSource adv_noise;
  RandomSource sign;
  RandomSource jammer;
  RandomSource channel;

  explicit Pipeline(std::uint64_t seed)
      : source(seed, Stream::Source),
        tx_noise(seed, Stream::TransmitterNoise),
        adv_noise(seed, Stream::AdversaryNoise),
        sign(seed, Stream::Sign),
        jammer(seed, Stream::Jammer),
        channel(seed, Stream::Channel) {}

  void run_block(std::uint64_t begin, std::uint64_t end, BlockMoments& acc) const {
    for (std::uint64_t i = begin; i < end; ++i) {
      const double s = sd_S * source.normal(i);
      const int gamma = randomized ? sign.sign(p, i) : 1;
      const double tx_coeff = randomized ? gamma * tx_gain : tx_gain;

      double y = 0.0;
      double power_T = 0.0;
      for (int m = 0; m < M; ++m) {
        const double u = s + sd_WT * tx_noise.normal(i, static_cast<std::uint32_t>(m));
        const double x = tx_coeff * u;
        y += x;
        power_T += x * x;
      }

      const double theta = (coordinated && K > 0) ? jammer.normal(i, 0) : 0.0;
      double power_A = 0.0;
      double first_adversary = 0.0;
      for (int k = 0; k < K; ++k) {
        const auto sub = static_cast<std::uint32_t>(k);
        double x = 0.0;
        if (adv_gain != 0.0) x = adv_gain * (s + sd_WA * adv_noise.normal(i, sub));
        if (sd_adv_noise != 0.0) x += sd_adv_noise * (coordinated ? theta : jammer.normal(i, sub));
        if (k == 0) first_adversary = x;
        y += x;
        power_A += x * x;
      }

      const double z = sd_Z * channel.normal(i);
      y += z;
      const double estimate = (gamma > 0 ? rx_gain_plus : rx_gain_minus) * y;
      const double err = s - estimate;

      acc[kSquaredError].add(err * err);
      acc[kPowerT].add(M > 0 ? power_T / M : 0.0);
      acc[kPowerA].add(K > 0 ? power_A / K : 0.0);
      acc[kCorrSX].add(s * first_adversary);
      acc[kCorrZX].add(z * first_adversary);
    }
  }
};

}  // namespace

SimResult simulate(const StrategyProfile& profile, const NetworkConfig& cfg, std::uint64_t n,
                   std::uint64_t seed, SimOptions options) {
  check_feasible(profile, cfg);
  if (n == 0) throw Error(ErrorCode::ZeroSamples, "n must be >= 1");

  Pipeline pipe(seed);
  pipe.M = cfg.M;
  pipe.K = cfg.K;
  pipe.sd_S = std::sqrt(cfg.var_S);
  pipe.sd_WT = std::sqrt(cfg.var_WT);
  pipe.sd_WA = std::sqrt(cfg.var_WA);
  pipe.sd_Z = std::sqrt(cfg.var_Z);
  pipe.tx_gain = transmitter_gain(profile.transmitter);
  pipe.randomized = std::holds_alternative<RandomizedSign>(profile.transmitter);
  pipe.p = sign_probability(profile.transmitter);
  pipe.adv_gain = adversary_gain(profile.adversary);
  const AdversaryNoise noise = adversary_noise(profile.adversary, cfg);
  pipe.sd_adv_noise = std::sqrt(noise.variance);
  pipe.coordinated = noise.coordinated;

  const auto gains = receiver_gains(profile, cfg);
  pipe.rx_gain_plus = gains.front();
  pipe.rx_gain_minus = gains.back();

  const std::uint64_t num_blocks = (n + kSimBlockSize - 1) / kSimBlockSize;
  std::vector<BlockMoments> blocks(num_blocks);

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, num_blocks));

  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t b = next++; b < num_blocks; b = next++) {
      const std::uint64_t begin = b * kSimBlockSize;
      pipe.run_block(begin, std::min(n, begin + kSimBlockSize), blocks[b]);
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  const BlockMoments total = reduce(blocks);
  SimResult result;
  result.n = n;
  const auto cost = total[kSquaredError].estimate();
  result.mean_cost = cost.mean;
  result.stderr = cost.stderr;
  const auto pt = total[kPowerT].estimate();
  result.empirical_power_T = pt.mean;
  result.stderr_power_T = pt.stderr;
  const auto pa = total[kPowerA].estimate();
  result.empirical_power_A = pa.mean;
  result.stderr_power_A = pa.stderr;
  const auto sx = total[kCorrSX].estimate();
  result.empirical_corr_SXk = sx.mean;
  result.stderr_corr_SXk = sx.stderr;
  const auto zx = total[kCorrZX].estimate();
  result.empirical_corr_ZXk = zx.mean;
  result.stderr_corr_ZXk = zx.stderr;
  return result;
}

PowerEstimate empirical_power(const StrategyProfile& profile, const NetworkConfig& cfg,
                              std::uint64_t n, std::uint64_t seed, SimOptions options) {
  const SimResult r = simulate(profile, cfg, n, seed, options);
  return {{r.empirical_power_T, r.stderr_power_T}, {r.empirical_power_A, r.stderr_power_A}};
}

CrossStats empirical_cross_stats(const StrategyProfile& profile, const NetworkConfig& cfg,
                                 std::uint64_t n, std::uint64_t seed, SimOptions options) {
  if (cfg.K < 1) throw Error(ErrorCode::NoAdversaries, "cross statistics need K >= 1");
  const SimResult r = simulate(profile, cfg, n, seed, options);
  return {{r.empirical_corr_SXk, r.stderr_corr_SXk}, {r.empirical_corr_ZXk, r.stderr_corr_ZXk}};
}

}  // namespace gsn
