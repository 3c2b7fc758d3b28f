// Network descriptions for the Gaussian N-relay diamond channel:
// one source, N parallel relays, one destination, no direct link.
// Gains g (source->relay) and h (relay->destination) are power gains,
// unit-variance noise everywhere, rates in bits per channel use.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace diamond {

inline constexpr double kInfiniteGain = std::numeric_limits<double>::infinity();

// Symmetric network: all N relays share the same pair of gains. At most one
// of g, h may be the infinite sentinel (used by the asymmetric relaxations;
// only the cut bounds accept it).
struct SymmetricNetwork {
  int n_relays;
  double g;
  double h;

  SymmetricNetwork(int n_relays_, double g_, double h_)
      : n_relays(n_relays_), g(g_), h(h_) {
    if (n_relays < 1) throw std::invalid_argument("n_relays must be >= 1");
    if (!(g > 0.0) || std::isnan(g)) throw std::invalid_argument("g must be > 0");
    if (!(h > 0.0) || std::isnan(h)) throw std::invalid_argument("h must be > 0");
    if (std::isinf(g) && std::isinf(h))
      throw std::invalid_argument("at most one of g, h may be infinite");
  }

  bool finite_gains() const { return std::isfinite(g) && std::isfinite(h); }
};

// Per-relay gains, all finite and positive.
struct AsymmetricNetwork {
  std::vector<double> g;
  std::vector<double> h;

  AsymmetricNetwork(std::vector<double> g_, std::vector<double> h_)
      : g(std::move(g_)), h(std::move(h_)) {
    if (g.size() != h.size()) throw std::invalid_argument("gain vectors must have equal length");
    if (g.empty()) throw std::invalid_argument("need at least one relay");
    for (double v : g)
      if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("all g_n must be positive and finite");
    for (double v : h)
      if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("all h_n must be positive and finite");
  }

  int n_relays() const { return static_cast<int>(g.size()); }
};

// Parameter cases of the closed-form rate/capacity bounds, in the order the
// case conditions are tested (first match wins on boundary ties).
enum class Regime { High, BcLimited, ProductHigh, ProductLow, MacLimited };

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::High: return "HIGH";
    case Regime::BcLimited: return "BC_LIMITED";
    case Regime::ProductHigh: return "PRODUCT_HIGH";
    case Regime::ProductLow: return "PRODUCT_LOW";
    case Regime::MacLimited: return "MAC_LIMITED";
  }
  return "?";
}

}  // namespace diamond
