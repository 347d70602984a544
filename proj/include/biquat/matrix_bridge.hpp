// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file matrix_bridge.hpp
 * @brief Biquaternion <-> 2x2 complex matrix maps and the ket/bra vector maps.
 *
 * to_matrix_linear is the complex-linear ring isomorphism
 *
 *   M(q) = q0 I + q1 (i sz) + q2 (i sy) + q3 (i sx)
 *        = [[q0 + i q1,  q2 + i q3],
 *           [-q2 + i q3, q0 - i q1]],
 *
 * under which -i e1, -i e2, -i e3 are sz, sy, sx and conj_both is the
 * Hermitian adjoint. Every identity in the library is cross-checked against
 * this representation, which never calls the Hamilton product.
 *
 * to_matrix_conjugating is the coefficient-conjugating transformation; it is not complex-linear and agrees with M only when q1, q2, q3
 * are purely imaginary (which covers the four Pauli unit quaternions).
 */

#pragma once

#include <array>
#include <iosfwd>

#include "biquat/biquaternion.hpp"

namespace biquat {

class ComplexMatrix2 {
 public:
  constexpr ComplexMatrix2() = default;
  constexpr ComplexMatrix2(cplx m00, cplx m01, cplx m10, cplx m11) : m_{m00, m01, m10, m11} {}

  static constexpr ComplexMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr ComplexMatrix2 sigma_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr ComplexMatrix2 sigma_y() { return {0.0, -kI, kI, 0.0}; }
  static constexpr ComplexMatrix2 sigma_z() { return {1.0, 0.0, 0.0, -1.0}; }

  constexpr cplx operator()(int r, int c) const { return m_[static_cast<std::size_t>(2 * r + c)]; }
  constexpr cplx& operator()(int r, int c) { return m_[static_cast<std::size_t>(2 * r + c)]; }

  ComplexMatrix2 adjoint() const;
  cplx det() const;
  cplx trace() const;

  friend ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b);
  friend ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b);
  friend ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b);
  friend ComplexMatrix2 operator*(cplx s, const ComplexMatrix2& a);

 private:
  std::array<cplx, 4> m_{};
};

struct ComplexVector2 {
  cplx v0{};
  cplx v1{};
};

ComplexVector2 operator*(const ComplexMatrix2& m, const ComplexVector2& v);
/// Hermitian inner product <a|b> = conj(a0) b0 + conj(a1) b1.
cplx vdot(const ComplexVector2& a, const ComplexVector2& b);

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b);
double max_abs_diff(const ComplexVector2& a, const ComplexVector2& b);
std::ostream& operator<<(std::ostream& os, const ComplexMatrix2& m);

ComplexMatrix2 to_matrix_linear(const Biquaternion& q);
/// Inverse of to_matrix_linear.
Biquaternion from_matrix_linear(const ComplexMatrix2& m);

/// The coefficient-conjugating transformation [[q0 + i q1, q2 + i q3], [q2* + (i q3)*, q0 - (i q1)*]].
ComplexMatrix2 to_matrix_conjugating(const Biquaternion& q);

/// Kravchenko-Shapiro form [[z, w], [-w*, z*]] for q = z + w e2 with the
/// bicomplex numbers z = q0 + q1 e1, w = q2 + q3 e1; e1 plays the matrix
/// imaginary unit and * conjugates e1.
ComplexMatrix2 to_matrix_ks(const Biquaternion& q);

/// Ket map a(q) = (sqrt2/2) (q0 + i q1, -q2 + i q3); the first column of
/// to_matrix_linear(q) divided by sqrt 2.
ComplexVector2 ket_to_vector(const Biquaternion& q);

/// Row-vector map for bra quaternions, (sqrt2/2) (q0 + i q1, q2 + i q3).
/// Satisfies bra_to_vector(conj_both(q)) = conj(ket_to_vector(q)).
ComplexVector2 bra_to_vector(const Biquaternion& q);

}  // namespace biquat
