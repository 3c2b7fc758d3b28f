// Brute-force validation of the cut-set machinery. Everything here is a test
// device, not a production path: dense small-matrix linear algebra, exhaustive
// 2^N cut enumeration, and two structurally independent inversion routes for
// the generalized Schur complement
//
//   Q_{S|S^c} = Q_{S,S} - Q_{S,S^c} Q^-_{S^c,S^c} Q_{S^c,S}
//
// (Moore-Penrose generalized inverse). Route one is generic Gauss-Jordan with
// partial pivoting, falling back to a Jacobi-eigendecomposition pseudo-inverse
// on singular blocks. Route two exploits the equicorrelated structure via the
// Sherman-Morrison closed form.

#pragma once

#include <vector>

#include "diamond/network.hpp"

namespace diamond {

class SquareMatrix {
 public:
  explicit SquareMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  }

  int dim() const { return dim_; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

 private:
  int dim_;
  std::vector<double> a_;
};

// rho * ones + (1-rho) * I. Requires rho in [-1/(N-1), 1] (PSD range); for
// N = 1 rho is ignored.
SquareMatrix equicorrelation_matrix(int n, double rho);

// Eigenvalues by cyclic Jacobi rotations (symmetric input assumed).
std::vector<double> symmetric_eigenvalues(const SquareMatrix& q);

bool is_symmetric(const SquareMatrix& q, double tol = 1e-12);
// Smallest eigenvalue >= -1e-9 * trace.
bool is_positive_semidefinite(const SquareMatrix& q);

// 1^T Q_{S|S^c} 1 for S given as 0-based member indices. Validates that Q is
// symmetric PSD. Empty S gives 0; S = [N] gives 1^T Q 1. Values in
// [-1e-9, 0) clamp to 0.
double schur_quadratic(const SquareMatrix& q, const std::vector<int>& members);

// Same quadratic form for the equicorrelated Q^rho and S = any subset of the
// given size, through the explicit Sherman-Morrison inverse ((ones/m^2) at
// rho = 1). Independent of both schur_quadratic and the closed form eta.
double schur_quadratic_sherman_morrison(int n_relays, double rho, int subset_size);

struct MinCutResult {
  double rate_bits;
  std::vector<int> members;  // lexicographically smallest minimizer, 0-based
};

// Exact minimum of 1/2 log2(1+|S^c|g) + 1/2 log2(1+h * 1^T Q^rho_{S|S^c} 1)
// over all 2^N subsets, using the generic inversion route. N <= 20.
MinCutResult brute_force_min_cut(const SymmetricNetwork& net, double rho);

struct EtaCheck {
  double closed;
  double numeric;
  double abs_err;
};

// Closed-form eta(rho, n) against the numeric Schur quadratic on S = [n].
EtaCheck oracle_check_eta(int n_relays, double rho, int n);

inline constexpr int kMaxBruteForceRelays = 20;
inline constexpr double kPinvRankTol = 1e-12;  // relative eigenvalue cutoff

}  // namespace diamond
