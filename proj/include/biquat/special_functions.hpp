// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file special_functions.hpp
 * @brief Generalized Laguerre polynomials with real superscript, spherical
 *        harmonics (Condon-Shortley phase) and the quadrature rules used for
 *        normalization and probability integrals.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "biquat/constants.hpp"

namespace biquat {

struct LaguerreParams {
  int degree = 0;      ///< n >= 0
  double alpha = 0.0;  ///< superscript, > -1, need not be an integer
};

/// L_n^{(alpha)}(x) by the three-term recurrence
///   (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1}.
/// Throws DomainError for n < 0, alpha <= -1 or non-finite x.
double laguerre(const LaguerreParams& p, double x);
double laguerre(int degree, double alpha, double x);

/// Same as laguerre() except that degree -1 yields 0 (used by the closed-form
/// Dirac radial functions at the lowest radial index).
double laguerre_or_zero(int degree, double alpha, double x);

/// d/dx L_n^{(alpha)}(x) = -L_{n-1}^{(alpha+1)}(x).
double laguerre_derivative(int degree, double alpha, double x);

struct SphericalHarmonicParams {
  int l = 0;
  int m = 0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Orthonormal Y_l^m(theta, phi) including the Condon-Shortley phase (-1)^m,
/// so Y_1^1 = -sqrt(3/8pi) sin(theta) e^{i phi} and
/// Y_l^{-m} = (-1)^m conj(Y_l^m). Throws DomainError if l < 0 or |m| > l.
cplx spherical_harmonic(const SphericalHarmonicParams& p);
cplx spherical_harmonic(int l, int m, double theta, double phi);

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
/// n-point rule, nodes ascending. Throws DomainError for n < 1.
GaussLegendre gauss_legendre(std::size_t n);

struct SphereGrid {
  std::size_t theta_nodes = 64;   ///< Gauss-Legendre in cos(theta)
  std::size_t phi_nodes = 128;    ///< uniform in phi
};

/// Integral over the unit sphere of f(theta, phi) dOmega with a
/// Gauss-Legendre (cos theta) x trapezoid (phi) product rule. Exact for
/// band-limited integrands of degree < 2 * theta_nodes in cos(theta) and
/// |m| < phi_nodes. Summation order is fixed.
double quadrature_sphere(const std::function<double(double, double)>& f, SphereGrid grid = {});
cplx quadrature_sphere_complex(const std::function<cplx(double, double)>& f, SphereGrid grid = {});

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

struct RadialQuadratureOptions {
  double relative_tolerance = 1e-10;  ///< requested from the adaptive rule
  double failure_threshold = 1e-8;    ///< relative error estimate that counts as non-convergence
  unsigned max_depth = 30;
};

/// Adaptive Gauss-Kronrod (61-point) integral of f over [lo, hi]. Throws
/// NumericalError, with the achieved error estimate and the interval in the
/// message, when the relative error estimate exceeds failure_threshold.
QuadratureResult quadrature_radial(const std::function<double(double)>& f, double lo, double hi,
                                   RadialQuadratureOptions opts = {});

}  // namespace biquat
