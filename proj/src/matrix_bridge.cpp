// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/matrix_bridge.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace biquat {

namespace {

// Bicomplex number a + b j with j^2 = -1 commuting with i; j stands for e1.
struct Bicomplex {
  cplx a;
  cplx b;

  // Value with j realized as the matrix-level imaginary unit.
  cplx realize() const { return a + kI * b; }
  Bicomplex conj_j() const { return {a, -b}; }
};

constexpr double kHalfSqrt2 = std::numbers::sqrt2 / 2.0;

}  // namespace

ComplexMatrix2 ComplexMatrix2::adjoint() const {
  return {std::conj(m_[0]), std::conj(m_[2]), std::conj(m_[1]), std::conj(m_[3])};
}

cplx ComplexMatrix2::det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

cplx ComplexMatrix2::trace() const { return m_[0] + m_[3]; }

ComplexMatrix2 operator+(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1)};
}

ComplexMatrix2 operator-(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1)};
}

ComplexMatrix2 operator*(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  return {
      a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0),
      a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
      a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0),
      a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1),
  };
}

ComplexMatrix2 operator*(cplx s, const ComplexMatrix2& a) {
  return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)};
}

ComplexVector2 operator*(const ComplexMatrix2& m, const ComplexVector2& v) {
  return {m(0, 0) * v.v0 + m(0, 1) * v.v1, m(1, 0) * v.v0 + m(1, 1) * v.v1};
}

cplx vdot(const ComplexVector2& a, const ComplexVector2& b) {
  return std::conj(a.v0) * b.v0 + std::conj(a.v1) * b.v1;
}

double max_abs_diff(const ComplexMatrix2& a, const ComplexMatrix2& b) {
  double m = 0.0;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  }
  return m;
}

double max_abs_diff(const ComplexVector2& a, const ComplexVector2& b) {
  return std::max(std::abs(a.v0 - b.v0), std::abs(a.v1 - b.v1));
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix2& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

ComplexMatrix2 to_matrix_linear(const Biquaternion& q) {
  return {q[0] + kI * q[1], q[2] + kI * q[3], -q[2] + kI * q[3], q[0] - kI * q[1]};
}

Biquaternion from_matrix_linear(const ComplexMatrix2& m) {
  return {
      0.5 * (m(0, 0) + m(1, 1)),
      -0.5 * kI * (m(0, 0) - m(1, 1)),
      0.5 * (m(0, 1) - m(1, 0)),
      -0.5 * kI * (m(0, 1) + m(1, 0)),
  };
}

ComplexMatrix2 to_matrix_conjugating(const Biquaternion& q) {
  return {
      q[0] + kI * q[1],
      q[2] + kI * q[3],
      std::conj(q[2]) + std::conj(kI * q[3]),
      q[0] - std::conj(kI * q[1]),
  };
}

ComplexMatrix2 to_matrix_ks(const Biquaternion& q) {
  const Bicomplex z{q[0], q[1]};
  const Bicomplex w{q[2], q[3]};
  return {z.realize(), w.realize(), -w.conj_j().realize(), z.conj_j().realize()};
}

ComplexVector2 ket_to_vector(const Biquaternion& q) {
  return {kHalfSqrt2 * (q[0] + kI * q[1]), kHalfSqrt2 * (-q[2] + kI * q[3])};
}

ComplexVector2 bra_to_vector(const Biquaternion& q) {
  return {kHalfSqrt2 * (q[0] + kI * q[1]), kHalfSqrt2 * (q[2] + kI * q[3])};
}

}  // namespace biquat
