// One-dimensional maximization: dense grid scan plus golden-section
// refinement of the best bracket. Deterministic; ties keep the lower abscissa.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace diamond {

struct ScalarMax {
  double x = 0.0;
  double value = 0.0;
};

template <typename F>
ScalarMax golden_section_maximize(F&& f, double lo, double hi, double x_tol,
                                  int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

// Scan the given abscissas, then refine around the best one within its
// neighboring bracket. Grid must be sorted ascending.
template <typename F>
ScalarMax grid_then_golden_maximize(F&& f, const std::vector<double>& grid,
                                    double x_tol) {
  ScalarMax best{grid.front(), f(grid.front())};
  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    double v = f(grid[i]);
    if (v > best.value) {
      best = {grid[i], v};
      best_idx = i;
    }
  }
  double lo = grid[best_idx == 0 ? 0 : best_idx - 1];
  double hi = grid[best_idx + 1 < grid.size() ? best_idx + 1 : best_idx];
  if (hi > lo) {
    ScalarMax refined = golden_section_maximize(f, lo, hi, x_tol);
    if (refined.value > best.value) best = refined;
  }
  return best;
}

}  // namespace diamond
