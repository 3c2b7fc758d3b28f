// Capacity upper bounds for the symmetric diamond network.
//
// The refined cut-set bound restricts the relay-input covariance to the
// equicorrelated family Q^rho = rho*ones + (1-rho)*I and evaluates
//
//   sup_{rho in [0,1)} min_{n in {0..N}}
//       1/2 log2(1 + (N-n) g) + 1/2 log2(1 + eta(rho, n) h),
//
// where eta(rho, n) = 1^T Q^rho_{[n]|[n]^c} 1 is the coherent power of n
// source-side relays after MMSE prediction from the other N-n. The weaker
// bounds (independent cuts, broadcast/MAC min-cut, the N^2/(N-n) form) are
// kept for comparison; the regime-matched closed form is the certificate.

#pragma once

#include "diamond/network.hpp"

namespace diamond {

struct RegimeRate;  // achievability.hpp

// min{ 1/2 log2(1+Ng), 1/2 log2(1+N^2 h) }; one gain may be infinite, in
// which case the other branch is returned.
double bc_mac_bound(const SymmetricNetwork& net);

// min over n of 1/2 log2(1+(N-n)g) + 1/2 log2(1+n^2 h)  (max and min swapped,
// so coherent gain is counted without the prediction loss).
double independent_cuts_bound(const SymmetricNetwork& net);

// 1^T Q^rho_{[n]|[n]^c} 1 with the boundary cases resolved by their limits:
// n=0 -> 0, n=N -> N(1+(N-1)rho), rho=1 (0<n<N) -> 0. Rejects rho outside
// [-1/(N-1), 1], where Q^rho is not positive semidefinite.
double eta(double rho, int n, int n_relays);

struct RhoSearchResult {
  double rate_bits;
  double rho_star;
};

// Numeric evaluation of the refined bound: 1024-point uniform grid on
// [0, 1-1e-6] plus golden-section refinement; the inner min over n is exact.
// The grid maximum lower-bounds the true sup by at most the search error.
// N=1 falls back to bc_mac_bound.
RhoSearchResult rho_cutset_bound(const SymmetricNetwork& net);

// min over n < N of 1/2 log2(1+(N-n)g) + 1/2 log2(1+N^2 h/(N-n)); the n=N
// term diverges and never attains the min. Finite gains only.
double simplified_cutset_bound(const SymmetricNetwork& net);

// Regime-matched closed-form upper bound. Sentinels: h infinite maps to the
// broadcast cut, g infinite to the MAC cut.
RegimeRate certified_upper_bound(const SymmetricNetwork& net);

inline constexpr int kRhoGridPoints = 1024;
inline constexpr double kRhoRefineTol = 1e-9;
inline constexpr double kRhoSearchCap = 1.0 - 1e-6;

// Caps certified by the closed-form pair for every N >= 2 and g, h > 0.
double additive_gap_cap();         // 1 + 1/2 log2(3)
double multiplicative_ratio_cap(); // 4 / ln(4/3)

}  // namespace diamond
