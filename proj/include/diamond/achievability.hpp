// Achievable rates for the symmetric diamond network.
//
//   amplify-and-forward:        R_1 = 1/2 log2(1 + N^2 g h / (1 + g + N h))
//   bursty AF, duty cycle d:    R_d = (d/2) log2(1 + (N^2 g h / d^2) /
//                                                    (1 + g/d + N h/d))
//   decode-and-forward:         1/2 log2(1 + min{g, N^2 h})
//
// The certified lower bound is the regime-matched closed-form floor on
// sup_d R_d; the duty-cycle search returns at least that floor.

#pragma once

#include "diamond/network.hpp"

namespace diamond {

// Active fraction of time in bursty transmission, in (0, 1].
struct DutyCycle {
  double value;
  explicit DutyCycle(double v) : value(v) {
    if (!(v > 0.0) || v > 1.0 || std::isnan(v))
      throw std::invalid_argument("duty cycle must lie in (0, 1]");
  }
};

double af_rate(const SymmetricNetwork& net);
double bursty_af_rate(const SymmetricNetwork& net, DutyCycle d);
double df_rate(const SymmetricNetwork& net);

Regime classify_regime(const SymmetricNetwork& net);

struct RegimeRate {
  double rate_bits;
  Regime regime;
};

// Closed-form floor for sup_d R_d, matched to the regime of (N, g, h).
RegimeRate certified_lower_bound(const SymmetricNetwork& net);

struct DutySearchResult {
  double delta;
  double rate_bits;
  bool clamped;  // true if the regime-prescribed duty cycle had to be clamped to 1
};

// Best duty cycle found: max of the regime-prescribed choice and a numeric
// search (256-point log grid on [1e-12, 1], golden-section refinement).
// Unimodality of d -> R_d is not assumed.
DutySearchResult optimal_duty_cycle(const SymmetricNetwork& net);

inline constexpr int kDeltaGridPoints = 256;
inline constexpr double kDeltaRefineTol = 1e-10;  // relative, on log(delta)

}  // namespace diamond
