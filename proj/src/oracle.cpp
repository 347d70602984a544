// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>

#include "biquat/errors.hpp"
#include "biquat/matrix_bridge.hpp"
#include "biquat/spin_half.hpp"

namespace biquat {

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

ComplexMatrix2 sigma(Axis a) {
  switch (a) {
    case Axis::X: return ComplexMatrix2::sigma_x();
    case Axis::Y: return ComplexMatrix2::sigma_y();
    case Axis::Z: return ComplexMatrix2::sigma_z();
  }
  return {};
}

ComplexMatrix2 outer_vec(const ComplexVector2& a, const ComplexVector2& b) {
  return {a.v0 * std::conj(b.v0), a.v0 * std::conj(b.v1), a.v1 * std::conj(b.v0), a.v1 * std::conj(b.v1)};
}

std::array<double, 3> random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::array<double, 3> n{};
  double len = 0.0;
  do {
    for (auto& x : n) x = g(rng);
    len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  } while (len < 1e-3);
  for (auto& x : n) x /= len;
  return n;
}

using Check = std::function<double(std::size_t, std::mt19937_64&, std::size_t&)>;

double homomorphism(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  double dev = 0.0;
  for (count = 0; count < samples; ++count) {
    const Biquaternion a = random_biquaternion(rng);
    const Biquaternion b = random_biquaternion(rng);
    dev = std::max(dev, max_abs_diff(to_matrix_linear(a * b), to_matrix_linear(a) * to_matrix_linear(b)));
  }
  return dev;
}

double bijection(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  double dev = 0.0;
  for (count = 0; count < samples; ++count) {
    const Biquaternion q = random_biquaternion(rng);
    dev = std::max(dev, max_abs_diff(from_matrix_linear(to_matrix_linear(q)), q));
  }
  return dev;
}

double pauli_products(std::size_t, std::mt19937_64&, std::size_t& count) {
  double dev = 0.0;
  count = 0;
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      const Biquaternion p = pauli_quaternion(a) * pauli_quaternion(b);
      dev = std::max(dev, max_abs_diff(to_matrix_linear(p), sigma(a) * sigma(b)));
      ++count;
    }
  }
  return dev;
}

double eigen(Axis axis, std::size_t& count) {
  const SpinOperator s = spin_operator(axis);
  const ComplexMatrix2 m = 0.5 * to_matrix_linear(s.value);
  double dev = 0.0;
  count = 0;
  for (const SpinState& st : {SpinState::up(), SpinState::down()}) {
    const ComplexVector2 lhs = ket_to_vector(apply(s, st));
    const ComplexVector2 rhs = m * ket_to_vector(st.value());
    dev = std::max(dev, max_abs_diff(lhs, rhs));
    ++count;
  }
  return dev;
}

double outer_products(std::size_t, std::mt19937_64&, std::size_t& count) {
  const ComplexVector2 u = ket_to_vector(SpinState::up().value());
  const ComplexVector2 d = ket_to_vector(SpinState::down().value());
  const std::map<Axis, ComplexMatrix2> from_vectors{
      {Axis::Z, outer_vec(u, u) - outer_vec(d, d)},
      {Axis::X, outer_vec(u, d) + outer_vec(d, u)},
      {Axis::Y, -kI * (outer_vec(u, d) - outer_vec(d, u))},
  };
  double dev = 0.0;
  count = 0;
  for (Axis a : kAxes) {
    const ComplexMatrix2 built = to_matrix_linear(outer_reconstruct(a));
    dev = std::max({dev, max_abs_diff(built, from_vectors.at(a)), max_abs_diff(built, sigma(a))});
    ++count;
  }
  return dev;
}

double rotation_conjugation(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  std::uniform_real_distribution<double> angle(-2.0 * kPi, 2.0 * kPi);
  double dev = 0.0;
  for (count = 0; count < samples; ++count) {
    const RotationOperator d = rotation(random_unit(rng), angle(rng));
    const Axis a = kAxes[count % 3];
    const ComplexMatrix2 md = to_matrix_linear(d.value());
    const ComplexMatrix2 rhs = 0.5 * (md.adjoint() * sigma(a) * md);
    dev = std::max(dev, max_abs_diff(to_matrix_linear(rotate_operator(d, spin_operator(a))), rhs));
  }
  return dev;
}

double ket_compatibility(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  std::vector<Biquaternion> states{SpinState::up().value(), SpinState::down().value()};
  for (std::size_t i = 0; i < samples; ++i) states.push_back(random_biquaternion(rng));
  double dev = 0.0;
  count = 0;
  for (const Biquaternion& q : states) {
    for (Axis a : kAxes) {
      const ComplexVector2 lhs = ket_to_vector(pauli_quaternion(a) * q);
      dev = std::max(dev, max_abs_diff(lhs, sigma(a) * ket_to_vector(q)));
      ++count;
    }
  }
  return dev;
}

double conjugating_subspace(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Biquaternion> qs;
  for (PauliAxis p : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z, PauliAxis::Identity}) {
    qs.push_back(pauli_quaternion(p));
  }
  for (std::size_t i = 0; i < samples; ++i) {
    qs.push_back({cplx{u(rng), u(rng)}, cplx{0.0, u(rng)}, cplx{0.0, u(rng)}, cplx{0.0, u(rng)}});
  }
  double dev = 0.0;
  for (const auto& q : qs) dev = std::max(dev, max_abs_diff(to_matrix_conjugating(q), to_matrix_linear(q)));
  count = qs.size();
  return dev;
}

double norm_determinant(std::size_t samples, std::mt19937_64& rng, std::size_t& count) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double dev = 0.0;
  for (count = 0; count < samples; ++count) {
    const Biquaternion q{u(rng), u(rng), u(rng), u(rng)};
    const cplx det = to_matrix_ks(q).det();
    double n2 = 0.0;
    for (std::size_t k = 0; k < 4; ++k) n2 += std::norm(q[k]);
    dev = std::max(dev, std::abs(det - n2));
  }
  return dev;
}

struct Entry {
  Check check;
  double tolerance;
};

const std::map<std::string, Entry, std::less<>>& registry() {
  static const std::map<std::string, Entry, std::less<>> r{
      {"homomorphism", {homomorphism, 1e-12}},
      {"bijection", {bijection, 1e-14}},
      {"pauli-products", {pauli_products, 1e-14}},
      {"eigen-x", {[](std::size_t, std::mt19937_64&, std::size_t& c) { return eigen(Axis::X, c); }, 1e-14}},
      {"eigen-y", {[](std::size_t, std::mt19937_64&, std::size_t& c) { return eigen(Axis::Y, c); }, 1e-14}},
      {"eigen-z", {[](std::size_t, std::mt19937_64&, std::size_t& c) { return eigen(Axis::Z, c); }, 1e-14}},
      {"outer-products", {outer_products, 1e-14}},
      {"rotation-conjugation", {rotation_conjugation, 1e-12}},
      {"ket-compatibility", {ket_compatibility, 1e-12}},
      {"conjugating-subspace", {conjugating_subspace, 1e-14}},
      {"norm-determinant", {norm_determinant, 1e-14}},
  };
  return r;
}

}  // namespace

Biquaternion random_biquaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Biquaternion q;
  for (std::size_t k = 0; k < 4; ++k) {
    const double re = u(rng);
    const double im = u(rng);
    q[k] = cplx{re, im};
  }
  return q;
}

const std::vector<std::string>& oracle_identities() {
  static const std::vector<std::string> names{
      "homomorphism",         "bijection",         "pauli-products", "eigen-x",
      "eigen-y",              "eigen-z",           "outer-products", "rotation-conjugation",
      "ket-compatibility",    "conjugating-subspace",    "norm-determinant"};
  return names;
}

OracleReport matrix_oracle_check(std::string_view identity, std::size_t samples, std::uint64_t seed) {
  const auto& reg = registry();
  const auto it = reg.find(identity);
  if (it == reg.end()) throw UsageError("unknown oracle identity: " + std::string(identity));
  std::mt19937_64 rng(seed);
  std::size_t count = 0;
  const double dev = it->second.check(samples, rng, count);
  return {std::string(identity), count, dev, it->second.tolerance};
}

}  // namespace biquat
