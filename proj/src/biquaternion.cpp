// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/biquaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "biquat/errors.hpp"

namespace biquat {

Biquaternion Biquaternion::unit(std::size_t k) {
  if (k > 3) throw DomainError("biquaternion unit index must be 0..3");
  Biquaternion q;
  q.c_[k] = 1.0;
  return q;
}

Biquaternion& Biquaternion::operator+=(const Biquaternion& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

Biquaternion& Biquaternion::operator-=(const Biquaternion& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

Biquaternion& Biquaternion::operator*=(cplx s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Biquaternion& Biquaternion::operator*=(const Biquaternion& o) { return *this = *this * o; }

Biquaternion operator*(const Biquaternion& a, const Biquaternion& b) {
  return {
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
      a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
  };
}

Biquaternion mul(const Biquaternion& a, const Biquaternion& b) { return a * b; }

cplx dot(const Biquaternion& a, const Biquaternion& b) {
  return a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Biquaternion cross(const Biquaternion& a, const Biquaternion& b) {
  return {0.0, a[2] * b[3] - a[3] * b[2], a[3] * b[1] - a[1] * b[3], a[1] * b[2] - a[2] * b[1]};
}

ProductParts decompose(const Biquaternion& a, const Biquaternion& b) {
  const cplx sa = a.scalar_part();
  const cplx sb = b.scalar_part();
  const Biquaternion va = a.vector_part();
  const Biquaternion vb = b.vector_part();
  return {sa * sb - dot(va, vb), sa * vb + sb * va + cross(va, vb)};
}

Biquaternion conj_vec(const Biquaternion& q) { return {q[0], -q[1], -q[2], -q[3]}; }

Biquaternion conj_complex(const Biquaternion& q) {
  return {std::conj(q[0]), std::conj(q[1]), std::conj(q[2]), std::conj(q[3])};
}

Biquaternion conj_both(const Biquaternion& q) {
  return {std::conj(q[0]), -std::conj(q[1]), -std::conj(q[2]), -std::conj(q[3])};
}

double norm_sq(const Biquaternion& q) {
  double s = 0.0;
  for (const auto& x : q.coefficients()) s += std::norm(x);
  return s;
}

cplx quadratic_form(const Biquaternion& q) {
  return q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3];
}

bool is_zero_divisor(const Biquaternion& q, double tol) {
  return max_abs(q) > tol && std::abs(quadratic_form(q)) <= tol;
}

Biquaternion inverse(const Biquaternion& q) {
  const cplx qf = quadratic_form(q);
  if (max_abs(q) <= kAlgebraTol || std::abs(qf) <= kAlgebraTol) {
    throw DomainError("no inverse");
  }
  return conj_vec(q) * (1.0 / qf);
}

double max_abs_diff(const Biquaternion& a, const Biquaternion& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < 4; ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double max_abs(const Biquaternion& q) {
  double m = 0.0;
  for (const auto& x : q.coefficients()) m = std::max(m, std::abs(x));
  return m;
}

bool approx_equal(const Biquaternion& a, const Biquaternion& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& q) {
  return os << '(' << q[0] << " e0 + " << q[1] << " e1 + " << q[2] << " e2 + " << q[3] << " e3)";
}

std::optional<RealQuaternion> RealQuaternion::from(const Biquaternion& q, double tol) {
  for (const auto& x : q.coefficients()) {
    if (std::abs(x.imag()) > tol) return std::nullopt;
  }
  return RealQuaternion{q[0].real(), q[1].real(), q[2].real(), q[3].real()};
}

RealQuaternion operator*(const RealQuaternion& a, const RealQuaternion& b) {
  return {
      a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
      a[0] * b[2] + a[2] * b[0] + a[3] * b[1] - a[1] * b[3],
      a[0] * b[3] + a[3] * b[0] + a[1] * b[2] - a[2] * b[1],
  };
}

RealQuaternion inverse(const RealQuaternion& q) {
  const double n2 = q.norm_sq();
  if (n2 == 0.0) throw DomainError("no inverse");
  const RealQuaternion c = q.conj();
  return {c[0] / n2, c[1] / n2, c[2] / n2, c[3] / n2};
}

}  // namespace biquat
