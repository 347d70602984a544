// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/special_functions.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "biquat/errors.hpp"

namespace biquat {

double laguerre(const LaguerreParams& p, double x) {
  if (p.degree < 0) throw DomainError("Laguerre degree must be nonnegative");
  if (!(p.alpha > -1.0)) throw DomainError("Laguerre superscript must exceed -1");
  if (!std::isfinite(x)) throw DomainError("Laguerre argument must be finite");
  if (p.degree == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + p.alpha - x;
  for (int k = 1; k < p.degree; ++k) {
    const double next = ((2.0 * k + 1.0 + p.alpha - x) * cur - (k + p.alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre(int degree, double alpha, double x) { return laguerre({degree, alpha}, x); }

double laguerre_or_zero(int degree, double alpha, double x) {
  return degree == -1 ? 0.0 : laguerre(degree, alpha, x);
}

double laguerre_derivative(int degree, double alpha, double x) {
  if (degree == 0) return 0.0;
  return -laguerre(degree - 1, alpha + 1.0, x);
}

cplx spherical_harmonic(const SphericalHarmonicParams& p) {
  if (p.l < 0) throw DomainError("spherical harmonic degree must be nonnegative");
  if (std::abs(p.m) > p.l) throw DomainError("spherical harmonic order must satisfy |m| <= l");
  const int m = std::abs(p.m);
  const double x = std::cos(p.theta);
  const double sx = std::sin(p.theta);

  // Normalized associated Legendre functions, Condon-Shortley phase included.
  double ymm = 1.0 / std::sqrt(4.0 * kPi);
  for (int k = 1; k <= m; ++k) ymm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * sx;

  double ylm = ymm;
  if (p.l > m) {
    double prev = ymm;
    double cur = std::sqrt(2.0 * m + 3.0) * x * ymm;
    for (int l = m + 2; l <= p.l; ++l) {
      const double ll = l;
      const double a = std::sqrt((4.0 * ll * ll - 1.0) / (ll * ll - m * m));
      const double b = std::sqrt(((ll - 1.0) * (ll - 1.0) - m * m) / (4.0 * (ll - 1.0) * (ll - 1.0) - 1.0));
      const double next = a * (x * cur - b * prev);
      prev = cur;
      cur = next;
    }
    ylm = cur;
  }

  const cplx y = ylm * std::polar(1.0, m * p.phi);
  if (p.m >= 0) return y;
  return ((m % 2 == 0) ? 1.0 : -1.0) * std::conj(y);
}

cplx spherical_harmonic(int l, int m, double theta, double phi) {
  return spherical_harmonic({l, m, theta, phi});
}

namespace {

// P_n(x) and P_n'(x) by the Bonnet recurrence.
std::pair<double, double> legendre_with_derivative(std::size_t n, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (std::size_t k = 2; k <= n; ++k) {
    const double kk = static_cast<double>(k);
    const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
    p0 = p1;
    p1 = p2;
  }
  const double nn = static_cast<double>(n);
  return {p1, nn * (x * p1 - p0) / (x * x - 1.0)};
}

}  // namespace

GaussLegendre gauss_legendre(std::size_t n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  GaussLegendre rule{std::vector<double>(n), std::vector<double>(n)};
  if (n == 1) {
    rule.nodes[0] = 0.0;
    rule.weights[0] = 2.0;
    return rule;
  }
  const double nn = static_cast<double>(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (static_cast<double>(i) + 0.75) / (nn + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre_with_derivative(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre_with_derivative(n, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

namespace {

template <typename T, typename F>
T sphere_sum(const F& f, SphereGrid grid) {
  if (grid.theta_nodes < 1 || grid.phi_nodes < 1) throw DomainError("sphere grid needs nodes");
  const GaussLegendre gl = gauss_legendre(grid.theta_nodes);
  const double dphi = 2.0 * kPi / static_cast<double>(grid.phi_nodes);
  T total{};
  for (std::size_t i = 0; i < grid.theta_nodes; ++i) {
    const double theta = std::acos(gl.nodes[i]);
    T ring{};
    for (std::size_t j = 0; j < grid.phi_nodes; ++j) {
      ring += f(theta, dphi * static_cast<double>(j));
    }
    total += gl.weights[i] * dphi * ring;
  }
  return total;
}

}  // namespace

double quadrature_sphere(const std::function<double(double, double)>& f, SphereGrid grid) {
  return sphere_sum<double>(f, grid);
}

cplx quadrature_sphere_complex(const std::function<cplx(double, double)>& f, SphereGrid grid) {
  return sphere_sum<cplx>(f, grid);
}

QuadratureResult quadrature_radial(const std::function<double(double)>& f, double lo, double hi,
                                   RadialQuadratureOptions opts) {
  if (!(hi > lo)) throw DomainError("radial quadrature needs lo < hi");
  double error = 0.0;
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      f, lo, hi, opts.max_depth, opts.relative_tolerance, &error, &l1);
  const double scale = std::max(std::abs(value), std::numeric_limits<double>::min());
  if (!std::isfinite(value) || error > opts.failure_threshold * scale) {
    std::ostringstream msg;
    msg << "radial quadrature did not converge on [" << lo << ", " << hi << "]: value " << value
        << ", error estimate " << error << ", L1 " << l1;
    throw NumericalError(msg.str());
  }
  return {value, error};
}

}  // namespace biquat
