// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file biquaternion.hpp
 * @brief Complex quaternions q = q0 e0 + q1 e1 + q2 e2 + q3 e3, q_k in C.
 *
 * Multiplication follows the Hamilton table
 *
 *   e1 e2 = -e2 e1 = e3,  e2 e3 = -e3 e2 = e1,  e3 e1 = -e1 e3 = e2,
 *   e_k^2 = -e0,
 *
 * and the ordinary imaginary unit i commutes with every e_k. In vector form
 * ab = a0 b0 - <a,b> + a0 b + b0 a + a x b with a right-handed cross
 * product (e1 x e2 = e3).
 *
 * The algebra is 8-real-dimensional and isomorphic to the 2x2 complex
 * matrices; it contains zero divisors, so only elements with a nonvanishing
 * complex quadratic form q0^2 + q1^2 + q2^2 + q3^2 are invertible.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>

#include "biquat/constants.hpp"

namespace biquat {

class Biquaternion {
 public:
  constexpr Biquaternion() = default;
  constexpr Biquaternion(cplx q0, cplx q1, cplx q2, cplx q3) : c_{q0, q1, q2, q3} {}

  /// Basis unit e_k, k in 0..3.
  static Biquaternion unit(std::size_t k);
  static constexpr Biquaternion scalar(cplx s) { return {s, 0.0, 0.0, 0.0}; }

  constexpr cplx operator[](std::size_t k) const { return c_[k]; }
  constexpr cplx& operator[](std::size_t k) { return c_[k]; }
  constexpr const std::array<cplx, 4>& coefficients() const { return c_; }

  /// Sc(q) = q0.
  constexpr cplx scalar_part() const { return c_[0]; }
  /// Vec(q) = q1 e1 + q2 e2 + q3 e3.
  constexpr Biquaternion vector_part() const { return {0.0, c_[1], c_[2], c_[3]}; }

  Biquaternion& operator+=(const Biquaternion& o);
  Biquaternion& operator-=(const Biquaternion& o);
  Biquaternion& operator*=(cplx s);
  Biquaternion& operator*=(const Biquaternion& o);

  friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
  friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
  friend Biquaternion operator-(const Biquaternion& a) { return {-a[0], -a[1], -a[2], -a[3]}; }
  friend Biquaternion operator*(Biquaternion a, cplx s) { return a *= s; }
  friend Biquaternion operator*(cplx s, Biquaternion a) { return a *= s; }
  friend Biquaternion operator*(Biquaternion a, double s) { return a *= cplx{s}; }
  friend Biquaternion operator*(double s, Biquaternion a) { return a *= cplx{s}; }
  friend Biquaternion operator/(Biquaternion a, double s) { return a *= cplx{1.0 / s}; }
  /// Hamilton product.
  friend Biquaternion operator*(const Biquaternion& a, const Biquaternion& b);

 private:
  std::array<cplx, 4> c_{};
};

inline const Biquaternion e0{1.0, 0.0, 0.0, 0.0};
inline const Biquaternion e1{0.0, 1.0, 0.0, 0.0};
inline const Biquaternion e2{0.0, 0.0, 1.0, 0.0};
inline const Biquaternion e3{0.0, 0.0, 0.0, 1.0};

/// Hamilton product; same as `a * b`.
Biquaternion mul(const Biquaternion& a, const Biquaternion& b);

/// Product split into its scalar and vector parts, Sc(ab) + Vec(ab) = ab.
struct ProductParts {
  cplx scalar;          ///< Sc(a)Sc(b) - <Vec a, Vec b>
  Biquaternion vector;  ///< Sc(a)Vec(b) + Sc(b)Vec(a) + Vec a x Vec b
};
ProductParts decompose(const Biquaternion& a, const Biquaternion& b);

/// Bilinear (non-Hermitian) dot product of the vector parts.
cplx dot(const Biquaternion& a, const Biquaternion& b);
/// Right-handed cross product of the vector parts.
Biquaternion cross(const Biquaternion& a, const Biquaternion& b);

/// q-bar: negates the vector part. Anti-automorphism: (ab)-bar = b-bar a-bar.
Biquaternion conj_vec(const Biquaternion& q);
/// q*: complex-conjugates every coefficient.
Biquaternion conj_complex(const Biquaternion& q);
/// q-bar*: both conjugations. Maps to the Hermitian adjoint under the matrix
/// representation.
Biquaternion conj_both(const Biquaternion& q);

/// |q|^2 = Sc(q q-bar*) = sum Re(q_k)^2 + sum Im(q_k)^2. Positive definite.
double norm_sq(const Biquaternion& q);

/// Complex quadratic form Sc(q q-bar) = q0^2 + q1^2 + q2^2 + q3^2. Vanishes
/// on zero divisors.
cplx quadratic_form(const Biquaternion& q);

/// True iff q != 0 and quadratic_form(q) == 0, both within `tol`.
bool is_zero_divisor(const Biquaternion& q, double tol = kAlgebraTol);

/// Inverse q-bar / Sc(q q-bar) for any biquaternion off the null cone.
/// Throws DomainError("no inverse") on zero and on zero divisors.
Biquaternion inverse(const Biquaternion& q);

/// Largest coefficient deviation |a_k - b_k| over k.
double max_abs_diff(const Biquaternion& a, const Biquaternion& b);
double max_abs(const Biquaternion& q);
bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol = kAlgebraTol);

std::ostream& operator<<(std::ostream& os, const Biquaternion& q);

/// Real quaternion: an element of H(R) with a positive-definite norm, so
/// every nonzero element is invertible.
class RealQuaternion {
 public:
  constexpr RealQuaternion() = default;
  constexpr RealQuaternion(double q0, double q1, double q2, double q3) : c_{q0, q1, q2, q3} {}

  /// Narrows a biquaternion whose imaginary parts vanish within `tol`.
  static std::optional<RealQuaternion> from(const Biquaternion& q, double tol = kAlgebraTol);

  constexpr double operator[](std::size_t k) const { return c_[k]; }
  Biquaternion to_biquaternion() const { return {c_[0], c_[1], c_[2], c_[3]}; }

  friend RealQuaternion operator*(const RealQuaternion& a, const RealQuaternion& b);

  RealQuaternion conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
  double norm_sq() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }

 private:
  std::array<double, 4> c_{};
};

/// q^{-1} = q-bar / |q|^2. Throws DomainError("no inverse") for q = 0.
RealQuaternion inverse(const RealQuaternion& q);

}  // namespace biquat
