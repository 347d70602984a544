// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <cmath>
#include <random>
#include <utility>

#include "biquat/errors.hpp"
#include "biquat/special_functions.hpp"

using namespace biquat;

namespace {

// Explicit sum: L_n^a(x) = sum_i (-1)^i Gamma(n+a+1) / (Gamma(n-i+1) Gamma(a+i+1) i!) x^i.
// Returns the sum and the sum of absolute terms, which bounds the cancellation error.
std::pair<double, double> laguerre_sum(int n, double a, double x) {
  long double total = 0.0L;
  long double magnitude = 0.0L;
  const long double la = a;
  for (int i = 0; i <= n; ++i) {
    const long double c = std::tgamma(n + la + 1.0L) /
                          (std::tgamma(n - i + 1.0L) * std::tgamma(la + i + 1.0L) * std::tgamma(i + 1.0L));
    const long double term = ((i % 2) ? -1.0L : 1.0L) * c * std::pow(static_cast<long double>(x), i);
    total += term;
    magnitude += std::fabs(term);
  }
  return {static_cast<double>(total), static_cast<double>(magnitude)};
}

}  // namespace

TEST_CASE("Laguerre closed values") {
  CHECK(laguerre(0, 0.5, 3.0) == 1.0);
  CHECK(laguerre(1, 0.5, 3.0) == doctest::Approx(1.5 - 3.0));
  CHECK(laguerre(2, 0.0, 1.0) == doctest::Approx(0.5 * (1.0 - 4.0 + 2.0)));
  CHECK(laguerre_or_zero(-1, 1.0, 2.0) == 0.0);
}

TEST_CASE("Laguerre matches the explicit sum for non-integer superscripts") {
  for (double a : {-0.9, -0.00005, 0.99997, 1.5, 2.9999, 4.2}) {
    for (int n = 0; n <= 8; ++n) {
      for (double x : {0.0, 0.3, 1.7, 5.0, 12.0, 30.0}) {
        const auto [ref, magnitude] = laguerre_sum(n, a, x);
        CHECK(std::abs(laguerre(n, a, x) - ref) <= 1e-13 * (1.0 + magnitude));
      }
    }
  }
}

TEST_CASE("Laguerre recurrence and derivative") {
  for (double a : {0.3, 1.99995}) {
    for (int n = 1; n < 10; ++n) {
      for (double x = 0.0; x <= 40.0; x += 2.5) {
        const double lhs = (n + 1) * laguerre(n + 1, a, x);
        const double rhs = (2 * n + 1 + a - x) * laguerre(n, a, x) - (n + a) * laguerre(n - 1, a, x);
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
      }
    }
    const double h = 1e-5;
    const double fd = (laguerre(4, a, 2.0 + h) - laguerre(4, a, 2.0 - h)) / (2 * h);
    CHECK(laguerre_derivative(4, a, 2.0) == doctest::Approx(fd).epsilon(1e-8));
  }
  CHECK_THROWS_AS(laguerre(-1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(laguerre(2, 0.0, NAN), DomainError);
}

TEST_CASE("spherical harmonics match Boost") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  for (int i = 0; i < 50; ++i) {
    const double t = th(rng);
    const double p = ph(rng);
    for (int l = 0; l <= 6; ++l) {
      for (int m = -l; m <= l; ++m) {
        const cplx ref = boost::math::spherical_harmonic(static_cast<unsigned>(l), m, t, p);
        CHECK(std::abs(spherical_harmonic(l, m, t, p) - ref) < 1e-13);
      }
    }
  }
  CHECK(spherical_harmonic(0, 0, 0.4, 1.0).real() == doctest::Approx(0.5 / std::sqrt(kPi)));
  CHECK_THROWS_AS(spherical_harmonic(1, 2, 0.1, 0.1), DomainError);
}

TEST_CASE("spherical harmonic symmetry and addition theorem") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  for (int i = 0; i < 20; ++i) {
    const double t = th(rng);
    const double p = ph(rng);
    for (int l = 0; l <= 4; ++l) {
      double sum = 0.0;
      for (int m = -l; m <= l; ++m) {
        sum += std::norm(spherical_harmonic(l, m, t, p));
        const cplx expect = ((m % 2) ? -1.0 : 1.0) * std::conj(spherical_harmonic(l, m, t, p));
        CHECK(std::abs(spherical_harmonic(l, -m, t, p) - expect) < 1e-14);
      }
      CHECK(std::abs(sum - (2 * l + 1) / (4 * kPi)) < 1e-10);
    }
  }
}

TEST_CASE("Gauss-Legendre rule") {
  for (std::size_t n : {1u, 2u, 5u, 16u, 64u}) {
    const auto rule = gauss_legendre(n);
    double w = 0.0;
    for (double x : rule.weights) w += x;
    CHECK(w == doctest::Approx(2.0).epsilon(1e-14));
    // Exact for x^(2n-2).
    const int deg = 2 * static_cast<int>(n) - 2;
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], deg);
    CHECK(s == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("sphere quadrature") {
  CHECK(quadrature_sphere([](double, double) { return 1.0; }) == doctest::Approx(4 * kPi).epsilon(1e-14));
  for (int l = 0; l <= 5; ++l) {
    for (int m = -l; m <= l; ++m) {
      const double v = quadrature_sphere([&](double t, double p) { return std::norm(spherical_harmonic(l, m, t, p)); });
      CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  const cplx off = quadrature_sphere_complex(
      [](double t, double p) { return std::conj(spherical_harmonic(2, 1, t, p)) * spherical_harmonic(3, 1, t, p); });
  CHECK(std::abs(off) < 1e-14);
}

TEST_CASE("radial quadrature") {
  const auto r = quadrature_radial([](double x) { return x * x * std::exp(-x); }, 0.0, 80.0);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.error_estimate < 1e-9);
  CHECK_THROWS_AS(quadrature_radial([](double x) { return 1.0 / x; }, 0.0, 1.0), NumericalError);
  CHECK_THROWS_AS(quadrature_radial([](double x) { return x; }, 1.0, 1.0), DomainError);
}
