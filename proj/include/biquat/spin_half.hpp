// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file spin_half.hpp
 * @brief Spin-1/2 observables, states, rotations and ladder operators as
 *        biquaternions.
 *
 * Pauli quaternions: q_x = -i e3, q_y = -i e2, q_z = -i e1, q_I = e0.
 * Basis states:      q_+ = (e0 - i e1)/sqrt2,  q_- = (-e2 - i e3)/sqrt2.
 *
 * Operators act by left Hamilton multiplication. Bras are conj_both of the
 * ket quaternion. All quantities are in units with hbar = 1, so the spin
 * operators carry a scale of 1/2.
 */

#pragma once

#include <array>
#include <optional>
#include <string>

#include "biquat/biquaternion.hpp"

namespace biquat {

enum class Axis { X, Y, Z };
enum class PauliAxis { X, Y, Z, Identity };

/// Right-handed component of a 3-vector along each axis: x -> 0, y -> 1, z -> 2.
int axis_index(Axis a);
/// Levi-Civita symbol over axis labels.
int levi_civita(Axis i, Axis j, Axis k);
/// The axis that is neither i nor j (i != j).
Axis third_axis(Axis i, Axis j);

/// -i e3 (x), -i e2 (y), -i e1 (z), e0 (identity).
Biquaternion pauli_quaternion(PauliAxis axis);
Biquaternion pauli_quaternion(Axis axis);

enum class SpinLabel { Up, Down, Custom };

/// Normalized ket; norm_sq(value) == 1 within kAlgebraTol.
class SpinState {
 public:
  /// Throws DomainError unless norm_sq(value) == 1 within kAlgebraTol.
  static SpinState make(const Biquaternion& value, SpinLabel label = SpinLabel::Custom);
  /// Rescales a nonzero value to unit norm.
  static SpinState normalized(const Biquaternion& value, SpinLabel label = SpinLabel::Custom);
  static SpinState up();
  static SpinState down();

  const Biquaternion& value() const { return value_; }
  SpinLabel label() const { return label_; }

 private:
  SpinState(const Biquaternion& v, SpinLabel l) : value_(v), label_(l) {}
  Biquaternion value_;
  SpinLabel label_;
};

struct SpinOperator {
  Biquaternion value;
  double scale = 0.5;  ///< units of hbar
};

/// S_axis = (1/2) q_axis.
SpinOperator spin_operator(Axis axis);

/// scale * (op.value * s.value). Not renormalized.
Biquaternion apply(const SpinOperator& op, const SpinState& s);

/// <s| as a quaternion: conj_both(s.value).
Biquaternion bra(const SpinState& s);
Biquaternion bra(const Biquaternion& ket);

/// <a|b>. With p = bra(a) * b the value is (p0 + i p1)/2, the (0,0) entry of
/// the matrix image of p over two; equals vdot of the ket vectors.
cplx inner(const SpinState& a, const SpinState& b);
cplx inner(const Biquaternion& a, const Biquaternion& b);

/// |a><b| = (1/2) a * bra(b).
Biquaternion outer(const Biquaternion& a, const Biquaternion& b);

/// Rebuilds 2 S_axis / hbar from ket-bra products:
///   z: |+><+| - |-><-|,  x: |+><-| + |-><+|,  y: -i(|+><-| - |-><+|).
Biquaternion outer_reconstruct(Axis axis);

/// D(n, phi) = e0 cos(phi/2) - (n_x e3 + n_y e2 + n_z e1) sin(phi/2).
class RotationOperator {
 public:
  /// Throws DomainError if |axis| differs from 1 by more than 1e-12.
  static RotationOperator about(const std::array<double, 3>& axis, double angle);
  static RotationOperator about(Axis axis, double angle);

  const std::array<double, 3>& axis() const { return axis_; }
  double angle() const { return angle_; }
  const Biquaternion& value() const { return value_; }
  /// D^dagger = D(n, -phi) = conj_vec(D).
  Biquaternion dagger() const;

 private:
  RotationOperator(const std::array<double, 3>& n, double phi, const Biquaternion& v)
      : axis_(n), angle_(phi), value_(v) {}
  std::array<double, 3> axis_;
  double angle_;
  Biquaternion value_;
};

RotationOperator rotation(const std::array<double, 3>& axis, double angle);

/// S.scale * D^dagger S.value D.
Biquaternion rotate_operator(const RotationOperator& d, const SpinOperator& s);

/// Closed form of D^dagger(n_i, phi) S_j D(n_i, phi):
///   (1/2) q_j                                   for i == j,
///   (1/2) (q_j cos phi - eps_ijk q_k sin phi)   otherwise.
Biquaternion rotated_spin_closed_form(Axis rotation_axis, Axis spin_axis, double angle);

enum class LadderSign { Raise, Lower };

/// q^+ = (e2 - i e3)/2, q^- = (-e2 - i e3)/2, i.e. (q_x +/- i q_y)/2. The 1/2
/// is part of the operator, so q^+ q_- = q_+ with no extra factor.
Biquaternion ladder(LadderSign sign);

}  // namespace biquat
