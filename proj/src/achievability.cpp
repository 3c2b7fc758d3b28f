#include "diamond/achievability.hpp"

#include <algorithm>
#include <cmath>

#include "diamond/math_util.hpp"
#include "diamond/search.hpp"

namespace diamond {

namespace {

void require_finite(const SymmetricNetwork& net) {
  if (!net.finite_gains())
    throw std::invalid_argument("operation requires finite channel gains");
}

// R_delta with the active-fraction SNR written as N^2 g h / (d (d + g + N h)),
// algebraically identical to the d^2-normalized form for every d in (0, 1].
double bursty_rate_core(int n_relays, double g, double h, double delta) {
  const double n = static_cast<double>(n_relays);
  const double snr = n * n * g * h / (delta * (delta + g + n * h));
  return 0.5 * delta * log2_1p(snr);
}

}  // namespace

double af_rate(const SymmetricNetwork& net) {
  require_finite(net);
  return bursty_rate_core(net.n_relays, net.g, net.h, 1.0);
}

double bursty_af_rate(const SymmetricNetwork& net, DutyCycle d) {
  require_finite(net);
  return bursty_rate_core(net.n_relays, net.g, net.h, d.value);
}

double df_rate(const SymmetricNetwork& net) {
  require_finite(net);
  const double n = static_cast<double>(net.n_relays);
  return half_log2_1p(std::min(net.g, n * n * net.h));
}

Regime classify_regime(const SymmetricNetwork& net) {
  require_finite(net);
  const double n = static_cast<double>(net.n_relays);
  const double g = net.g, h = net.h;
  if (std::max(g, n * h) >= 1.0) return Regime::High;
  if (g <= h) return Regime::BcLimited;
  if (g < n * n * h)
    return n * std::sqrt(g * h) >= 1.0 ? Regime::ProductHigh : Regime::ProductLow;
  return Regime::MacLimited;
}

RegimeRate certified_lower_bound(const SymmetricNetwork& net) {
  const Regime regime = classify_regime(net);
  const double n = static_cast<double>(net.n_relays);
  const double g = net.g, h = net.h;
  const double c = 0.5 * std::log(4.0 / 3.0);  // floor coefficient of the bursty cases
  double rate = 0.0;
  switch (regime) {
    case Regime::High:
      rate = half_log2_1p(n * std::min(g, n * h) / 3.0);
      break;
    case Regime::BcLimited:
      rate = c * log2_1p(n * g);
      break;
    case Regime::ProductHigh:
      rate = half_log2_1p(n * n * g * h / 3.0);
      break;
    case Regime::ProductLow:
      rate = c * log2_1p(n * std::sqrt(g * h));
      break;
    case Regime::MacLimited:
      rate = c * log2_1p(n * n * h);
      break;
  }
  return {rate, regime};
}

DutySearchResult optimal_duty_cycle(const SymmetricNetwork& net) {
  const Regime regime = classify_regime(net);
  const double n = static_cast<double>(net.n_relays);
  const double g = net.g, h = net.h;

  double prescribed = 1.0;
  switch (regime) {
    case Regime::High:
    case Regime::ProductHigh:
      prescribed = 1.0;
      break;
    case Regime::BcLimited:
      prescribed = n * g;
      break;
    case Regime::ProductLow:
      prescribed = n * std::sqrt(g * h);
      break;
    case Regime::MacLimited:
      prescribed = n * n * h;
      break;
  }
  // Inside each regime the prescribed value is provably <= 1; the clamp only
  // guards rounding at regime boundaries.
  bool clamped = false;
  if (prescribed > 1.0) {
    prescribed = 1.0;
    clamped = true;
  }

  auto rate_at = [&](double delta) { return bursty_rate_core(net.n_relays, g, h, delta); };

  DutySearchResult best{prescribed, rate_at(prescribed), clamped};

  // Log-uniform grid over [1e-12, 1], then golden-section on log(delta).
  std::vector<double> grid(kDeltaGridPoints);
  const double log_lo = std::log(1e-12);
  for (int i = 0; i < kDeltaGridPoints; ++i) {
    double t = log_lo * (1.0 - static_cast<double>(i) / (kDeltaGridPoints - 1));
    grid[i] = std::min(1.0, std::exp(t));
  }
  std::vector<double> log_grid(grid.size());
  std::transform(grid.begin(), grid.end(), log_grid.begin(),
                 [](double d) { return std::log(d); });
  ScalarMax searched = grid_then_golden_maximize(
      [&](double t) { return rate_at(std::exp(t)); }, log_grid, kDeltaRefineTol);
  double searched_delta = std::min(1.0, std::exp(searched.x));

  if (searched.value > best.rate_bits) {
    best.delta = searched_delta;
    best.rate_bits = searched.value;
  }
  return best;
}

}  // namespace diamond
