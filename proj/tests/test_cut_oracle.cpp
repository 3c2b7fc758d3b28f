#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "diamond/converse.hpp"
#include "diamond/cut_oracle.hpp"
#include "diamond/math_util.hpp"
#include "diamond/rng.hpp"

using namespace diamond;

namespace {

std::vector<int> range_subset(int n) {
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

std::vector<int> random_subset(int n_relays, int size, std::uint64_t seed,
                               std::uint64_t stream, std::uint64_t i) {
  std::vector<int> all = range_subset(n_relays);
  // Fisher-Yates with counter-based draws
  for (int k = n_relays - 1; k > 0; --k) {
    const int j = static_cast<int>(uniform01(seed, stream, i * 64 + k) * (k + 1));
    std::swap(all[k], all[j]);
  }
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

TEST_CASE("equicorrelation_matrix construction") {
  const SquareMatrix q0 = equicorrelation_matrix(2, 0.0);
  CHECK(q0(0, 0) == 1.0);
  CHECK(q0(0, 1) == 0.0);
  CHECK(q0(1, 1) == 1.0);

  const SquareMatrix q1 = equicorrelation_matrix(3, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(q1(i, j) == 1.0);

  // lower PSD boundary: the all-ones direction carries eigenvalue 0
  const SquareMatrix qb = equicorrelation_matrix(4, -1.0 / 3.0);
  CHECK(is_positive_semidefinite(qb));
  CHECK(schur_quadratic(qb, range_subset(4)) == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(equicorrelation_matrix(4, -0.5), std::invalid_argument);
  CHECK_THROWS_AS(equicorrelation_matrix(4, 1.1), std::invalid_argument);
}

TEST_CASE("schur_quadratic basic values") {
  // identity: the Schur complement is the identity block
  CHECK(schur_quadratic(equicorrelation_matrix(5, 0.0), {0, 1}) ==
        doctest::Approx(2.0).epsilon(1e-14));
  CHECK(schur_quadratic(equicorrelation_matrix(4, 0.5), {0, 1}) ==
        doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  // rho = 1 needs the pseudo-inverse route
  CHECK(schur_quadratic(equicorrelation_matrix(3, 1.0), {0}) ==
        doctest::Approx(0.0).epsilon(1e-12));
  // S = empty and S = [N]
  const SquareMatrix q = equicorrelation_matrix(6, 0.3);
  CHECK(schur_quadratic(q, {}) == 0.0);
  CHECK(schur_quadratic(q, range_subset(6)) ==
        doctest::Approx(6.0 * (1.0 + 5.0 * 0.3)).epsilon(1e-14));
}

TEST_CASE("schur_quadratic rejects invalid matrices") {
  SquareMatrix asym(2);
  asym(0, 0) = 1.0;
  asym(1, 1) = 1.0;
  asym(0, 1) = 0.4;
  asym(1, 0) = 0.1;
  CHECK_THROWS_AS(schur_quadratic(asym, {0}), std::invalid_argument);

  SquareMatrix indefinite(2);
  indefinite(0, 0) = 1.0;
  indefinite(1, 1) = 1.0;
  indefinite(0, 1) = indefinite(1, 0) = 2.0;  // eigenvalues 3 and -1
  CHECK_THROWS_AS(schur_quadratic(indefinite, {0}), std::invalid_argument);

  CHECK_THROWS_AS(schur_quadratic(equicorrelation_matrix(3, 0.5), {0, 4}),
                  std::invalid_argument);
}

TEST_CASE("generic and Sherman-Morrison inversion paths agree") {
  for (int n_relays = 2; n_relays <= 10; ++n_relays) {
    for (double rho : {0.0, 0.25, 0.5, 0.9, 0.99, 1.0}) {
      const SquareMatrix q = equicorrelation_matrix(n_relays, rho);
      for (int size = 0; size <= n_relays; ++size) {
        const double generic = schur_quadratic(q, range_subset(size));
        const double sm = schur_quadratic_sherman_morrison(n_relays, rho, size);
        CHECK(std::abs(generic - sm) <= 1e-10);
      }
    }
  }
}

TEST_CASE("permutation symmetry: the quadratic depends only on |S|") {
  const std::uint64_t seed = 0x5e7;
  for (int n_relays : {5, 8, 12}) {
    for (double rho : {0.2, 0.7, 0.95}) {
      const SquareMatrix q = equicorrelation_matrix(n_relays, rho);
      for (int size = 1; size < n_relays; ++size) {
        const double reference = schur_quadratic(q, range_subset(size));
        for (int rep = 0; rep < 50; ++rep) {
          const std::vector<int> s =
              random_subset(n_relays, size, seed, size, rep);
          CHECK(schur_quadratic(q, s) == doctest::Approx(reference).epsilon(1e-10));
        }
      }
    }
  }
}

TEST_CASE("quadratic form scales monotonically with the covariance") {
  // c*Q dominates Q in the PSD order for c >= 1 (cited monotonicity of the
  // generalized Schur complement, checked here on the quadratic form)
  for (double rho : {0.0, 0.4, 0.8}) {
    const SquareMatrix q = equicorrelation_matrix(6, rho);
    for (double c : {1.5, 2.0, 4.0}) {
      SquareMatrix scaled(6);
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) scaled(i, j) = c * q(i, j);
      for (int size : {1, 3, 5}) {
        CHECK(schur_quadratic(scaled, range_subset(size)) >=
              schur_quadratic(q, range_subset(size)) - 1e-9);
      }
    }
  }
}

TEST_CASE("quadratic form is concave along covariance mixtures") {
  for (double rho1 : {0.1, 0.6}) {
    for (double rho2 : {0.3, 0.9}) {
      const SquareMatrix q1 = equicorrelation_matrix(7, rho1);
      const SquareMatrix q2 = equicorrelation_matrix(7, rho2);
      for (double lambda : {0.25, 0.5, 0.75}) {
        SquareMatrix mix(7);
        for (int i = 0; i < 7; ++i)
          for (int j = 0; j < 7; ++j)
            mix(i, j) = lambda * q1(i, j) + (1.0 - lambda) * q2(i, j);
        for (int size : {2, 4}) {
          const double lhs = schur_quadratic(mix, range_subset(size));
          const double rhs = lambda * schur_quadratic(q1, range_subset(size)) +
                             (1.0 - lambda) * schur_quadratic(q2, range_subset(size));
          CHECK(lhs >= rhs - 1e-9);
        }
      }
    }
  }
}

TEST_CASE("brute_force_min_cut examples") {
  SUBCASE("independent inputs, unit gains") {
    const MinCutResult r = brute_force_min_cut(SymmetricNetwork(3, 1, 1), 0.0);
    CHECK(r.rate_bits == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r.members.empty());  // tie between the two extreme cuts resolves to {}
  }
  SUBCASE("matches the integer-reduced inner expression") {
    const MinCutResult r = brute_force_min_cut(SymmetricNetwork(2, 1, 1), 0.5);
    double expected = 1e300;
    for (int k = 0; k <= 2; ++k)
      expected = std::min(expected, half_log2_1p((2 - k) * 1.0) +
                                        half_log2_1p(eta(0.5, k, 2) * 1.0));
    CHECK(r.rate_bits == doctest::Approx(expected).epsilon(1e-12));
  }
  SUBCASE("single relay") {
    const MinCutResult r = brute_force_min_cut(SymmetricNetwork(1, 5, 7), 0.3);
    CHECK(r.rate_bits == doctest::Approx(0.5 * std::log2(6.0)).epsilon(1e-14));
  }
  SUBCASE("enumeration guard") {
    CHECK_THROWS_AS(brute_force_min_cut(SymmetricNetwork(21, 1, 1), 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("subset minimum equals integer minimum across a grid") {
  const std::vector<double> rhos = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5,
                                    0.6, 0.7, 0.8, 0.9, 0.99};
  for (int n_relays = 2; n_relays <= 12; ++n_relays) {
    for (double rho : rhos) {
      const SymmetricNetwork nw(n_relays, 0.7, 1.9);
      const MinCutResult r = brute_force_min_cut(nw, rho);
      double expected = 1e300;
      for (int k = 0; k <= n_relays; ++k)
        expected = std::min(expected, half_log2_1p((n_relays - k) * nw.g) +
                                          half_log2_1p(eta(rho, k, n_relays) * nw.h));
      CHECK(std::abs(r.rate_bits - expected) <= 1e-9);
    }
  }
}

TEST_CASE("oracle_check_eta") {
  const EtaCheck c1 = oracle_check_eta(4, 0.5, 2);
  CHECK(c1.closed == doctest::Approx(5.0 / 3.0).epsilon(1e-14));
  CHECK(c1.numeric == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
  CHECK(c1.abs_err <= 1e-10);

  const EtaCheck c2 = oracle_check_eta(6, 0.0, 4);
  CHECK(c2.closed == 4.0);
  CHECK(c2.abs_err <= 1e-12);

  // rho = 1, n = N: full coherence through the pseudo-inverse route
  const EtaCheck c3 = oracle_check_eta(5, 1.0, 5);
  CHECK(c3.closed == 25.0);
  CHECK(c3.numeric == doctest::Approx(25.0).epsilon(1e-12));

  CHECK_THROWS_AS(oracle_check_eta(1, 0.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle_check_eta(22, 0.5, 0), std::invalid_argument);
}
