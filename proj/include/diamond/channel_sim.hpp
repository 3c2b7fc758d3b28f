// Monte Carlo check of one amplify-and-forward block. The simulator draws the
// actual channel realization X, Z_n, Z per symbol, forms the relay outputs
// X_n = alpha(sqrt(g) X + Z_n), and tracks the destination's signal component
// alpha N sqrt(gh) X and noise component alpha sqrt(h) sum Z_n + Z separately,
// so the estimated output SNR can be compared against the closed form
// alpha^2 N^2 g h / (1 + alpha^2 N h).

#pragma once

#include <array>
#include <cstdint>

#include "diamond/network.hpp"

namespace diamond {

struct SimConfig {
  SymmetricNetwork net;
  double alpha;        // relay amplification; alpha^2 <= 1/(1+g) keeps unit power
  long num_symbols;
  std::uint64_t seed;

  SimConfig(SymmetricNetwork net_, double alpha_, long num_symbols_, std::uint64_t seed_)
      : net(net_), alpha(alpha_), num_symbols(num_symbols_), seed(seed_) {
    if (!net.finite_gains()) throw std::invalid_argument("simulation requires finite gains");
    if (num_symbols < 1) throw std::invalid_argument("num_symbols must be >= 1");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("alpha must be a nonnegative finite value");
    if (alpha * alpha > 1.0 / (1.0 + net.g) + 1e-9)
      throw std::invalid_argument("alpha exceeds the relay power constraint");
  }
};

struct SimResult {
  double est_output_snr;
  double est_relay_power;
  double est_source_power;
  // standard errors of the three estimates, in the same order
  std::array<double, 3> std_errors;
};

// Deterministic for a fixed seed (fixed accumulation order).
SimResult simulate_af(const SimConfig& cfg);

// alpha^2 N^2 g h / (1 + alpha^2 N h)
double af_output_snr_closed(const SymmetricNetwork& net, double alpha);

struct SnrValidation {
  double closed_snr;
  double est_snr;
  double z_score;
};

// Requires num_symbols >= 1e4 for a meaningful standard error.
SnrValidation validate_af_snr(const SimConfig& cfg);

}  // namespace diamond
