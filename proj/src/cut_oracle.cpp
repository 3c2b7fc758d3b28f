#include "diamond/cut_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "diamond/converse.hpp"
#include "diamond/math_util.hpp"

namespace diamond {

namespace {

double matrix_max_abs(const SquareMatrix& q) {
  double m = 0.0;
  for (int i = 0; i < q.dim(); ++i)
    for (int j = 0; j < q.dim(); ++j) m = std::max(m, std::abs(q(i, j)));
  return m;
}

// Cyclic Jacobi with accumulated rotations. Adequate for dim <= 20.
void jacobi_eigen(SquareMatrix a, std::vector<double>* values, SquareMatrix* vectors) {
  const int n = a.dim();
  SquareMatrix v(n);
  for (int i = 0; i < n; ++i) v(i, i) = 1.0;

  const double scale = std::max(1.0, matrix_max_abs(a));
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off <= 1e-30 * scale * scale) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a(p, q)) <= 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  values->resize(n);
  for (int i = 0; i < n; ++i) (*values)[i] = a(i, i);
  if (vectors) *vectors = v;
}

// Gauss-Jordan with partial pivoting; false on a numerically singular pivot.
bool gauss_jordan_invert(SquareMatrix m, SquareMatrix* inv) {
  const int n = m.dim();
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i) out(i, i) = 1.0;
  const double pivot_tol = kPinvRankTol * std::max(1.0, matrix_max_abs(m));

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
    if (std::abs(m(pivot, col)) <= pivot_tol) return false;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(m(pivot, j), m(col, j));
        std::swap(out(pivot, j), out(col, j));
      }
    }
    const double inv_p = 1.0 / m(col, col);
    for (int j = 0; j < n; ++j) {
      m(col, j) *= inv_p;
      out(col, j) *= inv_p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = m(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(col, j);
        out(r, j) -= f * out(col, j);
      }
    }
  }
  *inv = out;
  return true;
}

// Moore-Penrose inverse of a symmetric matrix; eigenvalues below
// kPinvRankTol * max|eig| are treated as zero.
SquareMatrix symmetric_pinv(const SquareMatrix& m) {
  std::vector<double> w;
  SquareMatrix v(m.dim());
  jacobi_eigen(m, &w, &v);
  double wmax = 0.0;
  for (double x : w) wmax = std::max(wmax, std::abs(x));
  const double cutoff = kPinvRankTol * std::max(wmax, 1e-300);
  const int n = m.dim();
  SquareMatrix out(n);
  for (int k = 0; k < n; ++k) {
    if (std::abs(w[k]) <= cutoff) continue;
    const double inv_w = 1.0 / w[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out(i, j) += inv_w * v(i, k) * v(j, k);
  }
  return out;
}

// Quadratic form without re-validating Q; members must be sorted and unique.
double schur_quadratic_unchecked(const SquareMatrix& q, const std::vector<int>& members) {
  const int n = q.dim();
  const int ns = static_cast<int>(members.size());
  if (ns == 0) return 0.0;

  double quad_ss = 0.0;
  for (int i : members)
    for (int j : members) quad_ss += q(i, j);
  if (ns == n) return quad_ss;  // S = [N]: 1^T Q 1

  std::vector<int> comp;
  comp.reserve(n - ns);
  {
    size_t k = 0;
    for (int i = 0; i < n; ++i) {
      if (k < members.size() && members[k] == i) {
        ++k;
        continue;
      }
      comp.push_back(i);
    }
  }
  const int m = static_cast<int>(comp.size());

  SquareMatrix b(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) b(i, j) = q(comp[i], comp[j]);
  std::vector<double> u(m, 0.0);  // u = Q_{S^c,S} 1
  for (int i = 0; i < m; ++i)
    for (int j : members) u[i] += q(comp[i], j);

  SquareMatrix binv(m);
  if (!gauss_jordan_invert(b, &binv)) binv = symmetric_pinv(b);

  double correction = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) correction += u[i] * binv(i, j) * u[j];

  double value = quad_ss - correction;
  if (value < 0.0 && value >= -1e-9) value = 0.0;
  return value;
}

std::vector<int> normalized_members(const SquareMatrix& q, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!members.empty() && (members.front() < 0 || members.back() >= q.dim()))
    throw std::invalid_argument("subset members out of range");
  return members;
}

}  // namespace

SquareMatrix equicorrelation_matrix(int n, double rho) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n >= 2) {
    const double lo = -1.0 / (n - 1);
    if (std::isnan(rho) || rho < lo || rho > 1.0)
      throw std::invalid_argument("rho outside [-1/(N-1), 1]: Q^rho not PSD");
  }
  SquareMatrix q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = (i == j) ? 1.0 : rho;
  return q;
}

std::vector<double> symmetric_eigenvalues(const SquareMatrix& q) {
  std::vector<double> w;
  jacobi_eigen(q, &w, nullptr);
  std::sort(w.begin(), w.end());
  return w;
}

bool is_symmetric(const SquareMatrix& q, double tol) {
  for (int i = 0; i < q.dim(); ++i)
    for (int j = i + 1; j < q.dim(); ++j)
      if (std::abs(q(i, j) - q(j, i)) > tol) return false;
  return true;
}

bool is_positive_semidefinite(const SquareMatrix& q) {
  double trace = 0.0;
  for (int i = 0; i < q.dim(); ++i) trace += q(i, i);
  const std::vector<double> w = symmetric_eigenvalues(q);
  return w.front() >= -1e-9 * std::max(1.0, trace);
}

double schur_quadratic(const SquareMatrix& q, const std::vector<int>& members) {
  if (!is_symmetric(q)) throw std::invalid_argument("covariance matrix not symmetric");
  if (!is_positive_semidefinite(q))
    throw std::invalid_argument("covariance matrix not positive semidefinite");
  return schur_quadratic_unchecked(q, normalized_members(q, members));
}

double schur_quadratic_sherman_morrison(int n_relays, double rho, int subset_size) {
  if (n_relays < 1) throw std::invalid_argument("n_relays must be >= 1");
  if (subset_size < 0 || subset_size > n_relays)
    throw std::invalid_argument("subset size out of range");
  if (n_relays >= 2) {
    const double lo = -1.0 / (n_relays - 1);
    if (std::isnan(rho) || rho < lo || rho > 1.0)
      throw std::invalid_argument("rho outside [-1/(N-1), 1]: Q^rho not PSD");
  }
  const int ns = subset_size;
  const int m = n_relays - ns;
  if (ns == 0) return 0.0;

  double quad_ss = ns + static_cast<double>(ns) * (ns - 1) * rho;
  if (m == 0) return quad_ss;

  // Inverse of (1-rho) I_m + rho ones_m: a*I + b*ones for rho < 1, and the
  // rank-one pseudo-inverse ones/m^2 at rho = 1.
  SquareMatrix binv(m);
  if (rho < 1.0) {
    const double a = 1.0 / (1.0 - rho);
    const double b = -rho / ((1.0 - rho) * (1.0 + (m - 1) * rho));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) binv(i, j) = (i == j) ? a + b : b;
  } else {
    const double b = 1.0 / (static_cast<double>(m) * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) binv(i, j) = b;
  }

  std::vector<double> u(m, ns * rho);  // row sums of Q_{S^c,S}
  double correction = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) correction += u[i] * binv(i, j) * u[j];

  double value = quad_ss - correction;
  if (value < 0.0 && value >= -1e-9) value = 0.0;
  return value;
}

MinCutResult brute_force_min_cut(const SymmetricNetwork& net, double rho) {
  const int n = net.n_relays;
  if (n > kMaxBruteForceRelays)
    throw std::invalid_argument("brute-force cut enumeration limited to N <= " +
                                std::to_string(kMaxBruteForceRelays));
  if (!net.finite_gains())
    throw std::invalid_argument("brute_force_min_cut requires finite gains");
  const SquareMatrix q = equicorrelation_matrix(n, rho);

  std::vector<double> bc_part(n + 1);
  for (int k = 0; k <= n; ++k)
    bc_part[k] = half_log2_1p(static_cast<double>(n - k) * net.g);

  auto members_of = [n](std::uint32_t mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    return members;
  };

  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_mask = 0;
  const std::uint32_t total = 1u << n;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    const std::vector<int> members = members_of(mask);
    const double quad = schur_quadratic_unchecked(q, members);
    const double value = bc_part[members.size()] + half_log2_1p(net.h * quad);
    if (value < best) {
      best = value;
      best_mask = mask;
    } else if (value == best) {
      const std::vector<int> a = members_of(best_mask);
      if (std::lexicographical_compare(members.begin(), members.end(), a.begin(), a.end()))
        best_mask = mask;
    }
  }
  return {best, members_of(best_mask)};
}

EtaCheck oracle_check_eta(int n_relays, double rho, int n) {
  if (n_relays < 2 || n_relays > kMaxBruteForceRelays)
    throw std::invalid_argument("oracle_check_eta requires 2 <= N <= 20");
  const double closed = eta(rho, n, n_relays);
  std::vector<int> members(n);
  std::iota(members.begin(), members.end(), 0);
  const double numeric = schur_quadratic(equicorrelation_matrix(n_relays, rho), members);
  return {closed, numeric, std::abs(closed - numeric)};
}

}  // namespace diamond
