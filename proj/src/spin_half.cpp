// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/spin_half.hpp"

#include <cmath>
#include <numbers>

#include "biquat/errors.hpp"

namespace biquat {

namespace {

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

}  // namespace

int axis_index(Axis a) {
  switch (a) {
    case Axis::X: return 0;
    case Axis::Y: return 1;
    case Axis::Z: return 2;
  }
  return 0;
}

int levi_civita(Axis i, Axis j, Axis k) {
  const int a = axis_index(i);
  const int b = axis_index(j);
  const int c = axis_index(k);
  if (a == b || b == c || a == c) return 0;
  return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

Axis third_axis(Axis i, Axis j) {
  if (i == j) throw DomainError("third_axis needs two distinct axes");
  const int k = 3 - axis_index(i) - axis_index(j);
  return k == 0 ? Axis::X : (k == 1 ? Axis::Y : Axis::Z);
}

Biquaternion pauli_quaternion(PauliAxis axis) {
  switch (axis) {
    case PauliAxis::X: return -kI * e3;
    case PauliAxis::Y: return -kI * e2;
    case PauliAxis::Z: return -kI * e1;
    case PauliAxis::Identity: return e0;
  }
  return e0;
}

Biquaternion pauli_quaternion(Axis axis) {
  switch (axis) {
    case Axis::X: return pauli_quaternion(PauliAxis::X);
    case Axis::Y: return pauli_quaternion(PauliAxis::Y);
    case Axis::Z: return pauli_quaternion(PauliAxis::Z);
  }
  return e0;
}

SpinState SpinState::make(const Biquaternion& value, SpinLabel label) {
  if (std::abs(norm_sq(value) - 1.0) > kAlgebraTol) {
    throw DomainError("spin state must have unit norm");
  }
  return {value, label};
}

SpinState SpinState::normalized(const Biquaternion& value, SpinLabel label) {
  const double n2 = norm_sq(value);
  if (n2 <= 0.0) throw DomainError("cannot normalize the zero state");
  return {value / std::sqrt(n2), label};
}

SpinState SpinState::up() { return {kInvSqrt2 * (e0 - kI * e1), SpinLabel::Up}; }

SpinState SpinState::down() { return {kInvSqrt2 * (-e2 - kI * e3), SpinLabel::Down}; }

SpinOperator spin_operator(Axis axis) { return {pauli_quaternion(axis), 0.5}; }

Biquaternion apply(const SpinOperator& op, const SpinState& s) {
  return op.scale * (op.value * s.value());
}

Biquaternion bra(const Biquaternion& ket) { return conj_both(ket); }

Biquaternion bra(const SpinState& s) { return bra(s.value()); }

cplx inner(const Biquaternion& a, const Biquaternion& b) {
  const Biquaternion p = bra(a) * b;
  return 0.5 * (p[0] + kI * p[1]);
}

cplx inner(const SpinState& a, const SpinState& b) { return inner(a.value(), b.value()); }

Biquaternion outer(const Biquaternion& a, const Biquaternion& b) { return 0.5 * (a * bra(b)); }

Biquaternion outer_reconstruct(Axis axis) {
  const Biquaternion up = SpinState::up().value();
  const Biquaternion down = SpinState::down().value();
  switch (axis) {
    case Axis::Z: return outer(up, up) - outer(down, down);
    case Axis::X: return outer(up, down) + outer(down, up);
    case Axis::Y: return -kI * (outer(up, down) - outer(down, up));
  }
  return {};
}

RotationOperator RotationOperator::about(const std::array<double, 3>& n, double angle) {
  const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (std::abs(len - 1.0) > 1e-12) throw DomainError("rotation axis must be a unit vector");
  const double c = std::cos(0.5 * angle);
  const double s = std::sin(0.5 * angle);
  // -i (q_p . n) = -(n_x e3 + n_y e2 + n_z e1)
  const Biquaternion v = c * e0 - s * (n[0] * e3 + n[1] * e2 + n[2] * e1);
  return {n, angle, v};
}

RotationOperator RotationOperator::about(Axis axis, double angle) {
  std::array<double, 3> n{0.0, 0.0, 0.0};
  n[static_cast<std::size_t>(axis_index(axis))] = 1.0;
  return about(n, angle);
}

Biquaternion RotationOperator::dagger() const { return conj_vec(value_); }

RotationOperator rotation(const std::array<double, 3>& axis, double angle) {
  return RotationOperator::about(axis, angle);
}

Biquaternion rotate_operator(const RotationOperator& d, const SpinOperator& s) {
  return s.scale * (d.dagger() * s.value * d.value());
}

Biquaternion rotated_spin_closed_form(Axis rotation_axis, Axis spin_axis, double angle) {
  const Biquaternion qj = pauli_quaternion(spin_axis);
  if (rotation_axis == spin_axis) return 0.5 * qj;
  const Axis k = third_axis(rotation_axis, spin_axis);
  const double eps = levi_civita(rotation_axis, spin_axis, k);
  return 0.5 * (std::cos(angle) * qj - eps * std::sin(angle) * pauli_quaternion(k));
}

Biquaternion ladder(LadderSign sign) {
  return sign == LadderSign::Raise ? 0.5 * (e2 - kI * e3) : 0.5 * (-e2 - kI * e3);
}

}  // namespace biquat
