#pragma once

#include <cmath>
#include <numbers>

namespace diamond {

// log2(1+x) via log1p; keeps full precision for x near 0, where 1+x rounds.
inline double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

inline double half_log2_1p(double x) { return 0.5 * log2_1p(x); }

}  // namespace diamond
