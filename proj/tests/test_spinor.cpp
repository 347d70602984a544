// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <tuple>

#include "biquat/errors.hpp"
#include "biquat/spinor.hpp"

using namespace biquat;

namespace {

// Clebsch-Gordan <l, m_j - ms; 1/2, ms | j, m_j> from the lowering recursion:
// start at |j, j> and apply J_- = L_- + S_-, with the top state fixed by
// orthogonality and a positive coefficient on the largest m_l.
std::pair<double, double> cg_by_lowering(int l, int twice_j, int twice_mj) {
  // Represent a state as amplitudes over (2 m_l, 2 m_s).
  using Key = std::pair<int, int>;
  std::map<Key, double> state;
  if (twice_j == 2 * l + 1) {
    state[{2 * l, 1}] = 1.0;
  } else {
    // |l - 1/2, l - 1/2> is orthogonal to |l + 1/2, l - 1/2>, which is
    // sqrt(2l/(2l+1)) |l-1, up> + sqrt(1/(2l+1)) |l, down>.
    state[{2 * l, -1}] = std::sqrt(2.0 * l / (2.0 * l + 1.0));
    state[{2 * l - 2, 1}] = -std::sqrt(1.0 / (2.0 * l + 1.0));
  }
  const auto lower_coeff = [](int twice_j_, int twice_m) {
    const double j = 0.5 * twice_j_;
    const double m = 0.5 * twice_m;
    return std::sqrt(j * (j + 1) - m * (m - 1));
  };
  for (int tm = twice_j; tm > twice_mj; tm -= 2) {
    std::map<Key, double> next;
    for (const auto& [key, amp] : state) {
      const auto [tml, tms] = key;
      if (tml > -2 * l) next[{tml - 2, tms}] += amp * lower_coeff(2 * l, tml);
      if (tms == 1) next[{tml, -1}] += amp * lower_coeff(1, 1);
    }
    const double norm = lower_coeff(twice_j, tm);
    for (auto& [key, amp] : next) amp /= norm;
    state = next;
  }
  const double up = state.count({twice_mj - 1, 1}) ? state[{twice_mj - 1, 1}] : 0.0;
  const double down = state.count({twice_mj + 1, -1}) ? state[{twice_mj + 1, -1}] : 0.0;
  return {up, down};
}

}  // namespace

TEST_CASE("Clebsch-Gordan factors match the lowering recursion") {
  for (int l = 0; l <= 5; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj <= 0) continue;
      for (int tm = -tj; tm <= tj; tm += 2) {
        const auto [c1, c2] = clebsch_coefficients(l, tj, tm);
        const auto [r1, r2] = cg_by_lowering(l, tj, tm);
        INFO("l=" << l << " 2j=" << tj << " 2mj=" << tm);
        CHECK(c1 == doctest::Approx(r1).epsilon(1e-12).scale(1.0));
        CHECK(c2 == doctest::Approx(r2).epsilon(1e-12).scale(1.0));
        CHECK(c1 * c1 + c2 * c2 == doctest::Approx(1.0));
      }
    }
  }
}

TEST_CASE("tabulated coefficients") {
  const auto [a1, a2] = clebsch_coefficients(1, 1, 1);
  CHECK(std::abs(a1) == doctest::Approx(std::sqrt(1.0 / 3.0)));
  CHECK(std::abs(a2) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  const auto [b1, b2] = clebsch_coefficients(2, 5, 3);
  CHECK(b1 == doctest::Approx(2.0 / std::sqrt(5.0)));
  CHECK(b2 == doctest::Approx(1.0 / std::sqrt(5.0)));
}

TEST_CASE("invalid triples") {
  CHECK_THROWS_AS(SpinorFunction(1, 5, 1), DomainError);
  CHECK_THROWS_AS(SpinorFunction(0, 1, 3), DomainError);
  CHECK_THROWS_AS(SpinorFunction(1, 3, 2), DomainError);
  CHECK_THROWS_AS(SpinorFunction(-1, 1, 1), DomainError);
  CHECK_THROWS_AS(SpinorFunction(0, -1, 1), DomainError);
}

TEST_CASE("worked example: down-state probability is |Y_2^2|^2 / 5") {
  const SpinorFunction y(2, 5, 3);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  for (int i = 0; i < 100; ++i) {
    const double t = th(rng);
    const double p = ph(rng);
    CHECK(std::abs(measure_probability(SpinProjection::Down, y, t, p) - 0.2 * std::norm(spherical_harmonic(2, 2, t, p))) <
          1e-12);
    CHECK(std::abs(measure_probability(SpinProjection::Up, y, t, p) - 0.8 * std::norm(spherical_harmonic(2, 1, t, p))) <
          1e-12);
  }
  const double total =
      quadrature_sphere([&](double t, double p) { return measure_probability(SpinProjection::Down, y, t, p); });
  CHECK(std::abs(total - 0.2) < 1e-8);
}

TEST_CASE("normalization, completeness and form agreement") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  for (int l = 0; l <= 4; ++l) {
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj <= 0) continue;
      for (int tm = -tj; tm <= tj; tm += 2) {
        const SpinorFunction s(l, tj, tm);
        const double total = quadrature_sphere([&](double t, double p) { return spinor_density(s, t, p); });
        CHECK(std::abs(total - 1.0) < 1e-8);
        for (int i = 0; i < 10; ++i) {
          const double t = th(rng);
          const double p = ph(rng);
          CHECK(std::abs(measure_probability(SpinProjection::Up, s, t, p) +
                         measure_probability(SpinProjection::Down, s, t, p) - spinor_density(s, t, p)) < 1e-12);
          CHECK(max_abs_diff(ket_to_vector(spinor_as_biquaternion(s, t, p)), spinor_as_vector(s, t, p)) < 1e-12);
        }
      }
    }
  }
}

TEST_CASE("orthogonality at fixed l") {
  const SpinorFunction a(2, 5, 1);
  const SpinorFunction b(2, 3, 1);
  const cplx ip = quadrature_sphere_complex(
      [&](double t, double p) { return vdot(spinor_as_vector(a, t, p), spinor_as_vector(b, t, p)); });
  CHECK(std::abs(ip) < 1e-8);
}
