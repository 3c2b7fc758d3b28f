#include "diamond/channel_sim.hpp"

#include <cmath>

#include "diamond/rng.hpp"

namespace diamond {

namespace {

// Stream ids: 0 source symbols, 1 destination noise, 2+i relay i noise.
constexpr std::uint64_t kStreamSource = 0;
constexpr std::uint64_t kStreamDestNoise = 1;
constexpr std::uint64_t kStreamRelayBase = 2;

struct Accumulator {
  double sum = 0.0;
  double sum_sq = 0.0;
  long count = 0;

  void add(double x) {
    sum += x;
    sum_sq += x * x;
    ++count;
  }
  double mean() const { return sum / count; }
  double variance_of_mean() const {
    const double m = mean();
    const double var = sum_sq / count - m * m;
    return (var > 0.0 ? var : 0.0) / count;
  }
};

}  // namespace

double af_output_snr_closed(const SymmetricNetwork& net, double alpha) {
  const double n = static_cast<double>(net.n_relays);
  const double a2 = alpha * alpha;
  return a2 * n * n * net.g * net.h / (1.0 + a2 * n * net.h);
}

SimResult simulate_af(const SimConfig& cfg) {
  const int n = cfg.net.n_relays;
  const double root_g = std::sqrt(cfg.net.g);
  const double root_h = std::sqrt(cfg.net.h);
  const double signal_gain = cfg.alpha * n * root_g * root_h;

  Accumulator sig_power, noise_power, relay_power, source_power;
  for (long t = 0; t < cfg.num_symbols; ++t) {
    const double x = standard_normal(cfg.seed, kStreamSource, static_cast<std::uint64_t>(t));
    const double z = standard_normal(cfg.seed, kStreamDestNoise, static_cast<std::uint64_t>(t));

    double relay_noise_sum = 0.0;
    double relay_sq_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double zi =
          standard_normal(cfg.seed, kStreamRelayBase + i, static_cast<std::uint64_t>(t));
      const double xi = cfg.alpha * (root_g * x + zi);
      relay_noise_sum += zi;
      relay_sq_sum += xi * xi;
    }

    const double sig = signal_gain * x;
    const double noise = cfg.alpha * root_h * relay_noise_sum + z;
    sig_power.add(sig * sig);
    noise_power.add(noise * noise);
    relay_power.add(relay_sq_sum / n);
    source_power.add(x * x);
  }

  const double s = sig_power.mean();
  const double w = noise_power.mean();
  SimResult r;
  r.est_output_snr = s / w;
  r.est_relay_power = relay_power.mean();
  r.est_source_power = source_power.mean();
  // delta method for the ratio of two sample means (signal and noise paths
  // are driven by independent variates)
  const double snr_var = sig_power.variance_of_mean() / (w * w) +
                         s * s / (w * w * w * w) * noise_power.variance_of_mean();
  r.std_errors = {std::sqrt(snr_var), std::sqrt(relay_power.variance_of_mean()),
                  std::sqrt(source_power.variance_of_mean())};
  return r;
}

SnrValidation validate_af_snr(const SimConfig& cfg) {
  if (cfg.num_symbols < 10000)
    throw std::invalid_argument("validate_af_snr requires num_symbols >= 1e4");
  const SimResult sim = simulate_af(cfg);
  const double closed = af_output_snr_closed(cfg.net, cfg.alpha);
  const double se = sim.std_errors[0];
  const double z = se > 0.0 ? (sim.est_output_snr - closed) / se : 0.0;
  return {closed, sim.est_output_snr, z};
}

}  // namespace diamond
