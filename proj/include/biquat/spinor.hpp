// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spinor.hpp
 * @brief Spin spherical harmonics y_l^{j m_j} in two-vector and biquaternion
 *        form.
 *
 *   y = C1 Y_l^{m_j - 1/2} chi_+ + C2 Y_l^{m_j + 1/2} chi_-
 *     = C1 Y_l^{m_j - 1/2} q_+ + C2 Y_l^{m_j + 1/2} q_-
 *     = (1/sqrt2) (C1 Y1 e0 - i C1 Y1 e1 - C2 Y2 e2 - i C2 Y2 e3).
 *
 * C1, C2 are the normalized Clebsch-Gordan factors (C1^2 + C2^2 = 1):
 *
 *   j = l + 1/2:  C1 =  sqrt((l + m_j + 1/2)/(2l + 1)),  C2 = sqrt((l - m_j + 1/2)/(2l + 1))
 *   j = l - 1/2:  C1 = -sqrt((l - m_j + 1/2)/(2l + 1)),  C2 = sqrt((l + m_j + 1/2)/(2l + 1))
 *
 * i.e. the Condon-Shortley convention <l, l; 1/2, j - l | j, j> > 0. With
 * this normalization the sphere integral of |y|^2 is exactly 1.
 */

#pragma once

#include <utility>

#include "biquat/biquaternion.hpp"
#include "biquat/matrix_bridge.hpp"
#include "biquat/special_functions.hpp"

namespace biquat {

/// Half-integers are carried doubled (twice_j = 2j) so they stay exact.
class SpinorFunction {
 public:
  /// Throws DomainError unless l >= 0, twice_j = 2l +/- 1 > 0, twice_mj odd
  /// and |twice_mj| <= twice_j.
  SpinorFunction(int l, int twice_j, int twice_mj);

  int l() const { return l_; }
  int twice_j() const { return twice_j_; }
  int twice_mj() const { return twice_mj_; }
  double j() const { return 0.5 * twice_j_; }
  double mj() const { return 0.5 * twice_mj_; }
  /// m of the spin-up harmonic, m_j - 1/2.
  int m_up() const { return (twice_mj_ - 1) / 2; }
  /// m of the spin-down harmonic, m_j + 1/2.
  int m_down() const { return (twice_mj_ + 1) / 2; }
  double c1() const { return c1_; }
  double c2() const { return c2_; }

 private:
  int l_;
  int twice_j_;
  int twice_mj_;
  double c1_;
  double c2_;
};

/// (C1, C2) for the triple; throws DomainError on an invalid triple.
std::pair<double, double> clebsch_coefficients(int l, int twice_j, int twice_mj);

/// (C1 Y_l^{m_j-1/2}, C2 Y_l^{m_j+1/2}); harmonics with |m| > l contribute 0.
ComplexVector2 spinor_as_vector(const SpinorFunction& s, double theta, double phi);

/// C1 Y1 q_+ + C2 Y2 q_-.
Biquaternion spinor_as_biquaternion(const SpinorFunction& s, double theta, double phi);

enum class SpinProjection { Up, Down };

/// |<q_pm | y(theta, phi)>|^2, the projection onto the spin basis state
/// computed through the bra product. Up + Down equals |y|^2 pointwise.
double measure_probability(SpinProjection state, const SpinorFunction& s, double theta, double phi);

/// norm_sq of the biquaternion form, i.e. |y(theta, phi)|^2.
double spinor_density(const SpinorFunction& s, double theta, double phi);

}  // namespace biquat
