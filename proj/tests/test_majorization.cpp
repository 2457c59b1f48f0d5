#include <doctest.h>

#include <cmath>
#include <limits>

#include "chromabound/errors.hpp"
#include "chromabound/majorization.hpp"
#include "chromabound/random.hpp"
#include "chromabound/spectrum.hpp"
#include "test_support.hpp"

using namespace chromabound;

TEST_CASE("sort_descending") {
  const double a[] = {1, 3, 2};
  CHECK(sort_descending(a) == std::vector<double>{3, 2, 1});
  const double b[] = {5};
  CHECK(sort_descending(b) == std::vector<double>{5});
  const double c[] = {2, 2, 2};
  CHECK(sort_descending(c) == std::vector<double>{2, 2, 2});
  const double nan[] = {1, std::numeric_limits<double>::quiet_NaN()};
  CHECK_THROWS_AS(sort_descending(nan), ContractError);
}

TEST_CASE("majorizes") {
  const double x1[] = {1, 0, -1}, y1[] = {2, 0, -2};
  CHECK(majorizes(x1, y1, 1e-12).holds);

  // Prefix sums of x: 1, 2; of y: 3.8, 1.9. Fails at m = 2.
  const double x2[] = {1, 1, -2}, y2[] = {3.8, -1.9, -1.9};
  const auto r = majorizes(x2, y2, 1e-12);
  CHECK_FALSE(r.holds);
  REQUIRE(r.first_violation);
  CHECK(r.first_violation->m == 2);
  CHECK(r.first_violation->lhs == doctest::Approx(2.0));
  CHECK(r.first_violation->rhs == doctest::Approx(1.9));

  CHECK(majorizes(y2, y2, 0.0).holds);

  // Totals differ: no prefix violation but not majorized.
  const double x3[] = {1, 0}, y3[] = {2, 0};
  const auto r3 = majorizes(x3, y3, 1e-12);
  CHECK_FALSE(r3.holds);
  CHECK_FALSE(r3.first_violation);
  CHECK(r3.sum_gap == doctest::Approx(1.0));

  // Order of the inputs does not matter.
  const double x4[] = {-1, 1, 0};
  CHECK(majorizes(x4, y1, 1e-12).holds);

  const double short_[] = {1};
  CHECK_THROWS_AS(majorizes(short_, y1, 1e-12), DimensionError);
}

TEST_CASE("minimal_tau examples") {
  CHECK(minimal_tau(Spectrum({1, -1})) == doctest::Approx(1.0));
  CHECK(minimal_tau(Spectrum({2, -1, -1})) == doctest::Approx(2.0));
  CHECK(minimal_tau(Spectrum({3, 1, 1, 1, 1, 1, -2, -2, -2, -2})) == doctest::Approx(1.5));

  // Same values from the bisection oracle.
  CHECK(oracle::tau_by_bisection({1, -1}) == doctest::Approx(1.0));
  CHECK(oracle::tau_by_bisection({2, -1, -1}) == doctest::Approx(2.0));
  CHECK(oracle::tau_by_bisection({3, 1, 1, 1, 1, 1, -2, -2, -2, -2}) == doctest::Approx(1.5));
}

TEST_CASE("minimal_tau errors") {
  CHECK_THROWS_AS(minimal_tau(Spectrum({0, 0, 0})), DegenerateError);
  CHECK_THROWS_AS(minimal_tau(Spectrum({1, 0, 0})), ContractError);
}

TEST_CASE("minimal_tau matches the bisection oracle on random traceless spectra") {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 12;
    std::vector<double> v(n);
    double mean = 0.0;
    for (double& x : v) mean += (x = rng.normal());
    mean /= static_cast<double>(n);
    for (double& x : v) x -= mean;
    const Spectrum s(v);
    const double tau = minimal_tau(s);
    CHECK(std::abs(tau - oracle::tau_by_bisection(v)) <= 1e-9 * std::max(1.0, tau));
  }
}

TEST_CASE("minimal_tau properties") {
  Rng rng(123);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 10;
    const HermitianMatrix m = random_traceless_hermitian(n, rng, trial % 2 == 0);
    const Spectrum s = spectrum(m);
    const double tau = minimal_tau(s);

    // Scale invariance (homogeneous of degree 0).
    for (double c : {0.001, 0.5, 3.0, 1e6}) {
      CHECK(std::abs(minimal_tau(s.scaled(c)) - tau) <= 1e-12 * tau);
    }

    // At least the m = 1 ratio.
    CHECK(tau >= s.largest() / std::abs(s.smallest()) - 1e-12);

    // tau is feasible and, when the maximum is attained at a single m, minimal.
    const double tol = 1e-9;
    std::vector<double> scaled(s.values().begin(), s.values().end());
    for (double& x : scaled) x *= tau;
    CHECK(majorizes(s.negated().values(), scaled, tol * s.norm()).holds);

    std::vector<double> ratios;
    double top = 0.0, bottom = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
      top += s[k - 1];
      bottom -= s[n - k];
      if (bottom > tol * s.norm()) ratios.push_back(top / bottom);
    }
    std::sort(ratios.begin(), ratios.end(), std::greater<>());
    const bool strict = ratios.size() < 2 || ratios[0] - ratios[1] > 10 * tol;
    if (strict) {
      std::vector<double> smaller(s.values().begin(), s.values().end());
      for (double& x : smaller) x *= tau - 10 * tol;
      CHECK_FALSE(majorizes(s.negated().values(), smaller, 1e-14).holds);
    }
  }
}

TEST_CASE("symmetric spectra have tau exactly 1") {
  CHECK(minimal_tau(Spectrum({2, 0, 0, -2})) == 1.0);
  CHECK(minimal_tau(Spectrum({3, 1, -1, -3})) == 1.0);
  CHECK(minimal_tau(Spectrum({1.5, 0.25, 0, -0.25, -1.5})) == 1.0);
}
