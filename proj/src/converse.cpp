#include "diamond/converse.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "diamond/achievability.hpp"
#include "diamond/math_util.hpp"
#include "diamond/search.hpp"

namespace diamond {

namespace {

void require_finite(const SymmetricNetwork& net) {
  if (!net.finite_gains())
    throw std::invalid_argument("operation requires finite channel gains");
}

// eta without argument validation, for the inner search loops.
double eta_raw(double rho, int n, int n_relays) {
  if (n == 0) return 0.0;
  const double nn = static_cast<double>(n_relays);
  if (n == n_relays) return nn * (1.0 + (nn - 1.0) * rho);
  if (rho == 1.0) return 0.0;
  const double nd = static_cast<double>(n);
  const double m = nn - nd;  // relays on the destination side
  return nd * (1.0 + (nd - 1.0) * rho - nd * m * rho * rho / (1.0 + (m - 1.0) * rho));
}

}  // namespace

double bc_mac_bound(const SymmetricNetwork& net) {
  const double n = static_cast<double>(net.n_relays);
  if (std::isinf(net.g)) return half_log2_1p(n * n * net.h);
  if (std::isinf(net.h)) return half_log2_1p(n * net.g);
  return std::min(half_log2_1p(n * net.g), half_log2_1p(n * n * net.h));
}

double independent_cuts_bound(const SymmetricNetwork& net) {
  require_finite(net);
  const double n = static_cast<double>(net.n_relays);
  double best = half_log2_1p(n * net.g);  // k = 0
  for (int k = 1; k <= net.n_relays; ++k) {
    const double kd = static_cast<double>(k);
    best = std::min(best, half_log2_1p((n - kd) * net.g) + half_log2_1p(kd * kd * net.h));
  }
  return best;
}

double eta(double rho, int n, int n_relays) {
  if (n_relays < 2) throw std::invalid_argument("eta requires N >= 2");
  if (n < 0 || n > n_relays) throw std::invalid_argument("n must lie in {0,...,N}");
  const double lo = -1.0 / (n_relays - 1);
  if (std::isnan(rho) || rho < lo || rho > 1.0)
    throw std::invalid_argument("rho outside [-1/(N-1), 1]: Q^rho not PSD");
  return eta_raw(rho, n, n_relays);
}

RhoSearchResult rho_cutset_bound(const SymmetricNetwork& net) {
  require_finite(net);
  const int nr = net.n_relays;
  if (nr == 1) return {bc_mac_bound(net), 0.0};

  const double n = static_cast<double>(nr);
  std::vector<double> bc_part(nr + 1);   // 1/2 log2 of the source-side factor
  std::vector<double> bc_factor(nr + 1); // the factor itself
  for (int k = 0; k <= nr; ++k) {
    const double a = (n - static_cast<double>(k)) * net.g;
    bc_part[k] = half_log2_1p(a);
    bc_factor[k] = 1.0 + a;
  }

  // The min over n compares the product of the two cut factors and takes one
  // log at the end (log is monotone); gains large enough to overflow the
  // product fall back to the sum-of-logs form.
  const bool sum_form = net.g > 1e100 || net.h > 1e100;
  auto inner_min = [&](double rho) {
    if (sum_form) {
      double best = bc_part[0];
      for (int k = 1; k <= nr; ++k) {
        const double v = bc_part[k] + half_log2_1p(eta_raw(rho, k, nr) * net.h);
        if (v < best) best = v;
      }
      return best;
    }
    double best = bc_factor[0];  // n = 0: destination-side factor is 1
    for (int k = 1; k <= nr; ++k) {
      const double p = bc_factor[k] * (1.0 + eta_raw(rho, k, nr) * net.h);
      if (p < best) best = p;
    }
    return 0.5 * std::log2(best);
  };

  std::vector<double> grid(kRhoGridPoints);
  for (int i = 0; i < kRhoGridPoints; ++i)
    grid[i] = kRhoSearchCap * static_cast<double>(i) / (kRhoGridPoints - 1);
  ScalarMax best = grid_then_golden_maximize(inner_min, grid, kRhoRefineTol);
  return {best.value, best.x};
}

double simplified_cutset_bound(const SymmetricNetwork& net) {
  require_finite(net);
  const int nr = net.n_relays;
  const double n = static_cast<double>(nr);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < nr; ++k) {
    const double m = n - static_cast<double>(k);
    best = std::min(best, half_log2_1p(m * net.g) + half_log2_1p(n * n * net.h / m));
  }
  return best;
}

RegimeRate certified_upper_bound(const SymmetricNetwork& net) {
  const double n = static_cast<double>(net.n_relays);
  if (std::isinf(net.h)) return {half_log2_1p(n * net.g), Regime::BcLimited};
  if (std::isinf(net.g)) return {half_log2_1p(n * n * net.h), Regime::MacLimited};

  const Regime regime = classify_regime(net);
  const double g = net.g, h = net.h;
  double rate = 0.0;
  switch (regime) {
    case Regime::High:
      rate = half_log2_1p(n * std::min(g, n * h));
      break;
    case Regime::BcLimited:
      rate = half_log2_1p(n * g);
      break;
    case Regime::ProductHigh:
      rate = half_log2_1p(2.0 * n * n * g * h) + 0.5;
      break;
    case Regime::ProductLow:
      rate = log2_1p(2.0 * n * std::sqrt(g * h));
      break;
    case Regime::MacLimited:
      rate = half_log2_1p(n * n * h);
      break;
  }
  return {rate, regime};
}

double additive_gap_cap() { return 1.0 + 0.5 * std::log2(3.0); }

double multiplicative_ratio_cap() { return 4.0 / std::log(4.0 / 3.0); }

}  // namespace diamond
