// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/spinor.hpp"

#include <cmath>
#include <cstdlib>
#include <tuple>

#include "biquat/errors.hpp"
#include "biquat/spin_half.hpp"

namespace biquat {

namespace {

cplx harmonic_or_zero(int l, int m, double theta, double phi) {
  if (std::abs(m) > l) return 0.0;
  return spherical_harmonic(l, m, theta, phi);
}

}  // namespace

std::pair<double, double> clebsch_coefficients(int l, int twice_j, int twice_mj) {
  if (l < 0) throw DomainError("spinor needs l >= 0");
  if (twice_j != 2 * l + 1 && twice_j != 2 * l - 1) throw DomainError("spinor needs j = l +/- 1/2");
  if (twice_j <= 0) throw DomainError("spinor needs j > 0");
  if (twice_mj % 2 == 0) throw DomainError("m_j must be a half-integer");
  if (std::abs(twice_mj) > twice_j) throw DomainError("spinor needs |m_j| <= j");

  const double mj = 0.5 * twice_mj;
  const double denom = 2.0 * l + 1.0;
  const double plus = std::sqrt((l + mj + 0.5) / denom);
  const double minus = std::sqrt((l - mj + 0.5) / denom);
  if (twice_j == 2 * l + 1) return {plus, minus};
  return {-minus, plus};
}

SpinorFunction::SpinorFunction(int l, int twice_j, int twice_mj)
    : l_(l), twice_j_(twice_j), twice_mj_(twice_mj) {
  std::tie(c1_, c2_) = clebsch_coefficients(l, twice_j, twice_mj);
}

ComplexVector2 spinor_as_vector(const SpinorFunction& s, double theta, double phi) {
  return {s.c1() * harmonic_or_zero(s.l(), s.m_up(), theta, phi),
          s.c2() * harmonic_or_zero(s.l(), s.m_down(), theta, phi)};
}

Biquaternion spinor_as_biquaternion(const SpinorFunction& s, double theta, double phi) {
  const cplx a = s.c1() * harmonic_or_zero(s.l(), s.m_up(), theta, phi);
  const cplx b = s.c2() * harmonic_or_zero(s.l(), s.m_down(), theta, phi);
  return a * SpinState::up().value() + b * SpinState::down().value();
}

double measure_probability(SpinProjection state, const SpinorFunction& s, double theta, double phi) {
  const SpinState basis = state == SpinProjection::Up ? SpinState::up() : SpinState::down();
  return std::norm(inner(basis.value(), spinor_as_biquaternion(s, theta, phi)));
}

double spinor_density(const SpinorFunction& s, double theta, double phi) {
  return norm_sq(spinor_as_biquaternion(s, theta, phi));
}

}  // namespace biquat
