// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "biquat/errors.hpp"
#include "biquat/matrix_bridge.hpp"
#include "biquat/oracle.hpp"
#include "biquat/spin_half.hpp"

using namespace biquat;

TEST_CASE("Pauli units map to Pauli matrices") {
  CHECK(max_abs_diff(to_matrix_linear(-kI * e1), ComplexMatrix2::sigma_z()) == 0.0);
  CHECK(max_abs_diff(to_matrix_linear(-kI * e2), ComplexMatrix2::sigma_y()) == 0.0);
  CHECK(max_abs_diff(to_matrix_linear(-kI * e3), ComplexMatrix2::sigma_x()) == 0.0);
  CHECK(max_abs_diff(to_matrix_linear(e0), ComplexMatrix2::identity()) == 0.0);
}

TEST_CASE("explicit matrix layout") {
  const Biquaternion q{cplx{1, 2}, cplx{3, 4}, cplx{5, 6}, cplx{7, 8}};
  const ComplexMatrix2 m = to_matrix_linear(q);
  CHECK(m(0, 0) == q[0] + kI * q[1]);
  CHECK(m(0, 1) == q[2] + kI * q[3]);
  CHECK(m(1, 0) == -q[2] + kI * q[3]);
  CHECK(m(1, 1) == q[0] - kI * q[1]);
}

TEST_CASE("ring homomorphism and bijection") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_biquaternion(rng);
    const auto b = random_biquaternion(rng);
    CHECK(max_abs_diff(to_matrix_linear(a * b), to_matrix_linear(a) * to_matrix_linear(b)) < 1e-12);
    CHECK(max_abs_diff(from_matrix_linear(to_matrix_linear(a)), a) < 1e-14);
    CHECK(max_abs_diff(to_matrix_linear(conj_both(a)), to_matrix_linear(a).adjoint()) < 1e-15);
  }
}

TEST_CASE("conjugating map agrees on its subspace only") {
  for (PauliAxis p : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z, PauliAxis::Identity}) {
    const auto q = pauli_quaternion(p);
    CHECK(max_abs_diff(to_matrix_conjugating(q), to_matrix_linear(q)) == 0.0);
  }
  const Biquaternion sub{cplx{0.3, -0.2}, cplx{0, 0.7}, cplx{0, -0.1}, cplx{0, 0.4}};
  CHECK(max_abs_diff(to_matrix_conjugating(sub), to_matrix_linear(sub)) < 1e-15);
  // Off the subspace the coefficient conjugation shows up.
  CHECK(max_abs_diff(to_matrix_conjugating(e2), to_matrix_linear(e2)) > 1.0);
}

TEST_CASE("Kravchenko-Shapiro matrix") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Biquaternion q{u(rng), u(rng), u(rng), u(rng)};
    double n2 = 0.0;
    for (std::size_t k = 0; k < 4; ++k) n2 += std::norm(q[k]);
    CHECK(std::abs(to_matrix_ks(q).det() - n2) < 1e-14);
    CHECK(max_abs_diff(to_matrix_ks(q), to_matrix_linear(q)) < 1e-15);
  }
}

TEST_CASE("ket and bra maps") {
  const ComplexVector2 up = ket_to_vector(SpinState::up().value());
  const ComplexVector2 down = ket_to_vector(SpinState::down().value());
  CHECK(max_abs_diff(up, ComplexVector2{1.0, 0.0}) < 1e-15);
  CHECK(max_abs_diff(down, ComplexVector2{0.0, 1.0}) < 1e-15);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const auto q = random_biquaternion(rng);
    const ComplexVector2 k = ket_to_vector(q);
    const ComplexVector2 b = bra_to_vector(conj_both(q));
    CHECK(std::abs(b.v0 - std::conj(k.v0)) < 1e-15);
    CHECK(std::abs(b.v1 - std::conj(k.v1)) < 1e-15);
    for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
      const auto s = pauli_quaternion(a);
      CHECK(max_abs_diff(ket_to_vector(s * q), to_matrix_linear(s) * k) < 1e-14);
    }
  }
}

TEST_CASE("oracle registry") {
  for (const auto& name : oracle_identities()) {
    const auto r = matrix_oracle_check(name, 200, 9);
    INFO(name << " deviation " << r.max_deviation);
    CHECK(r.passed());
    CHECK(r.samples > 0);
  }
  CHECK(matrix_oracle_check("pauli-products").samples == 9);
  CHECK(matrix_oracle_check("homomorphism", 1000).max_deviation < 1e-12);
  CHECK_THROWS_AS(matrix_oracle_check("no-such-identity"), UsageError);
  const auto a = matrix_oracle_check("rotation-conjugation", 50, 3);
  const auto b = matrix_oracle_check("rotation-conjugation", 50, 3);
  CHECK(a.max_deviation == b.max_deviation);
}
