// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "biquat/errors.hpp"
#include "biquat/hydrogen.hpp"

using namespace biquat;

namespace {

struct State {
  int n;
  int kappa;
};
constexpr std::array<State, 6> kStates{{{1, -1}, {2, -1}, {2, 1}, {2, -2}, {3, -1}, {3, -2}}};

std::vector<double> grid(double lo, double hi, int count) {
  std::vector<double> r;
  for (int i = 0; i < count; ++i) r.push_back(lo + (hi - lo) * i / (count - 1));
  return r;
}

}  // namespace

TEST_CASE("binding energies against 40-digit references") {
  // Values from the Sommerfeld formula evaluated in 40-digit arithmetic.
  CHECK(binding_energy(1, -1, 1.0) == doctest::Approx(-2.6626031733117582143e-5).epsilon(1e-13));
  CHECK(binding_energy(2, -2, 1.0) == doctest::Approx(-6.6564414691901802902e-6).epsilon(1e-13));
  CHECK(binding_energy(2, 1, 1.0) == doctest::Approx(-6.6565300879758015994e-6).epsilon(1e-13));
  CHECK(binding_energy(1, -1, 50.0) == doctest::Approx(-0.068940596042160840608).epsilon(1e-14));
  CHECK(binding_energy(3, -2, 90.0) == doctest::Approx(-0.024878100221621177554).epsilon(1e-14));
  CHECK(binding_energy(1, -1, 137.0) == doctest::Approx(-0.97707998687701736582).epsilon(1e-14));
  CHECK(energy(1, -1, 1.0) == doctest::Approx(1.0 - 2.6626031733117582143e-5).epsilon(1e-15));
}

TEST_CASE("golden values at Z = 1") {
  CHECK(std::abs(binding_energy(1, -1, 1.0) * kElectronRestEnergyEv + 13.6059) < 1e-3);
  const double split = (energy(2, -2, 1.0) - energy(2, 1, 1.0)) * kElectronRestEnergyEv;
  CHECK(std::abs(split / 4.53e-5 - 1.0) < 0.02);
  const QuantumNumbers ground{1, -1, 1, 1.0};
  CHECK(radial_parameters(ground, energy(ground)).s == doctest::Approx(0.99997337396826688242).epsilon(1e-15));
  // The ground-state energy is s itself.
  CHECK(energy(ground) == doctest::Approx(radial_parameters(ground, energy(ground)).s).epsilon(1e-15));
}

TEST_CASE("degeneracy and monotonicity") {
  for (double Z : {1.0, 30.0, 80.0}) {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 1; k < n; ++k) {
        CHECK(energy(n, k, Z) == energy(n, -k, Z));
        CHECK(energy(n, -k, Z) > energy(n - 1, -k, Z));
      }
    }
  }
}

TEST_CASE("quantum number validation") {
  CHECK_THROWS_AS(energy(1, -1, 200.0), DomainError);
  CHECK_THROWS_WITH_AS(energy(1, 1, 200.0), doctest::Contains("kappa"), DomainError);
  CHECK_THROWS_WITH_AS(energy(2, -1, 140.0), doctest::Contains("s imaginary"), DomainError);
  CHECK_THROWS_AS(energy(0, -1, 1.0), DomainError);
  CHECK_THROWS_AS(energy(2, 0, 1.0), DomainError);
  CHECK_THROWS_AS(energy(2, -3, 1.0), DomainError);
  CHECK_THROWS_AS(energy(2, 2, 1.0), DomainError);
  CHECK_THROWS_AS(energy(1, -1, -1.0), DomainError);
  CHECK_THROWS_AS(validate({2, -2, 5, 1.0}), DomainError);
  CHECK_THROWS_AS(validate({2, -2, 2, 1.0}), DomainError);
  CHECK_NOTHROW(validate({2, -2, -3, 1.0}));
  CHECK(QuantumNumbers{2, 1, 1, 1.0}.l_upper() == 1);
  CHECK(QuantumNumbers{2, 1, 1, 1.0}.l_lower() == 0);
  CHECK(QuantumNumbers{2, -2, 1, 1.0}.l_upper() == 1);
  CHECK(QuantumNumbers{2, -2, 1, 1.0}.l_lower() == 2);
}

TEST_CASE("ground state ratio G/F = -sqrt((1 - E)/(1 + E))") {
  for (double Z : {1.0, 20.0, 80.0}) {
    const QuantumNumbers qn{1, -1, 1, Z};
    const RadialSolution sol(qn);
    const double E = sol.energy();
    for (double rho : {0.1, 1.0, 4.0}) {
      CHECK(sol.G(rho) / sol.F(rho) == doctest::Approx(-std::sqrt((1.0 - E) / (1.0 + E))).epsilon(1e-12));
    }
  }
}

TEST_CASE("closed form solves the radial system") {
  const auto r = grid(0.05, 30.0, 300);
  for (double Z : {1.0, 20.0, 50.0}) {
    for (const auto& st : kStates) {
      const QuantumNumbers qn{st.n, st.kappa, 1, Z};
      INFO("Z=" << Z << " n=" << st.n << " kappa=" << st.kappa);
      CHECK(ode_residual(qn, binding_energy(qn), r).max_abs() < 1e-6);
    }
  }
}

TEST_CASE("finite-difference residual of the full functions agrees") {
  const QuantumNumbers qn{2, 1, 1, 1.0};
  const RadialSolution sol(qn);
  const auto r = grid(0.5, 20.0, 40);
  const auto res = ode_residual([&](double x) { return sol.F_at(x); }, [&](double x) { return sol.G_at(x); },
                                sol.k(), qn.Z, sol.binding(), r);
  CHECK(res.max_abs() < 1e-6);
}

TEST_CASE("alternative conventions fail the system") {
  const auto r = grid(0.05, 30.0, 100);
  const QuantumNumbers ground{1, -1, 1, 1.0};
  SUBCASE("swapped coefficient vanishes identically in the ground state") {
    const RadialSolution swapped(ground, binding_energy(ground), {KSign::Standard, ClosedForm::SwappedCoefficient});
    for (double rho : {0.1, 1.0, 3.0}) {
      CHECK(swapped.F(rho) == 0.0);
      CHECK(swapped.G(rho) == 0.0);
    }
  }
  SUBCASE("flipped k sign") {
    // With k = +kappa the closed form is the partner state of opposite kappa, which satisfies its own
    // system exactly but not the system for the requested kappa.
    const QuantumNumbers qn{2, -1, 1, 1.0};
    const RadialSolution flipped(qn, binding_energy(qn), {KSign::Flipped, ClosedForm::Standard});
    CHECK(ode_residual(qn, binding_energy(qn), r, {KSign::Flipped, ClosedForm::Standard}).max_abs() < 1e-6);
    const auto res = ode_residual([&](double x) { return flipped.F_at(x); },
                                  [&](double x) { return flipped.G_at(x); }, -qn.kappa, qn.Z,
                                  binding_energy(qn), r);
    CHECK(res.max_abs() > 1e-3);
  }
  SUBCASE("off-eigenvalue energy") {
    const QuantumNumbers qn{2, -1, 1, 1.0};
    CHECK(ode_residual(qn, 1.01 * binding_energy(qn), r).max_abs() > 1e-4);
  }
}

TEST_CASE("shooting eigensolver agrees with the Sommerfeld formula") {
  for (double Z : {1.0, 20.0, 50.0}) {
    for (const auto& st : kStates) {
      const double b = binding_energy(st.n, st.kappa, Z);
      const auto r = shoot_eigenvalue(st.n, st.kappa, Z, nonrelativistic_bracket(st.n, Z));
      INFO("Z=" << Z << " n=" << st.n << " kappa=" << st.kappa);
      CHECK(std::abs(r.binding - b) / std::abs(b) < 1e-8);
      CHECK(r.energy == doctest::Approx(1.0 + b));
    }
  }
}

TEST_CASE("shooting rejects a bracket without an eigenvalue") {
  const double b = binding_energy(1, -1, 1.0);
  CHECK_THROWS_AS(shoot_eigenvalue(1, -1, 1.0, {0.5 * b, 0.4 * b}), NumericalError);
  CHECK_THROWS_AS(shoot_eigenvalue(1, -1, 1.0, {0.4 * b, 0.5 * b}), DomainError);
}

TEST_CASE("normalization and probabilities") {
  for (const auto& st : kStates) {
    const QuantumNumbers qn{st.n, st.kappa, 1, 1.0};
    const WaveFunction w = assemble_wavefunction(qn);
    const SphereGrid coarse{16, 32};
    const auto shell = [&](double r) {
      return r * r * quadrature_sphere([&](double t, double p) { return probability_density(w, r, t, p); }, coarse);
    };
    INFO("n=" << st.n << " kappa=" << st.kappa);
    CHECK(std::abs(quadrature_radial(shell, 0.0, w.outer_radius()).value - 1.0) < 1e-6);
    CHECK(std::abs(probability_in_region(w, 0.0, INFINITY).value - 1.0) < 1e-6);
  }
  const WaveFunction ground = assemble_wavefunction({1, -1, 1, 1.0});
  // Nonrelativistic value 1 - 5 e^{-2} = 0.32332; relativity shifts it by ~1e-5.
  CHECK(std::abs(probability_in_region(ground, 0.0, 1.0).value - 0.3233) < 1e-4);
  CHECK(std::abs(probability_in_region(ground, 0.0, 1.0).value - (1.0 - 5.0 * std::exp(-2.0))) < 5e-5);
  const double a = probability_in_region(ground, 0.0, 2.0).value;
  const double b = probability_in_region(ground, 2.0, INFINITY).value;
  CHECK(std::abs(a + b - 1.0) < 1e-10);
  CHECK_THROWS_AS(probability_in_region(ground, 2.0, 1.0), DomainError);
}

TEST_CASE("density structure") {
  for (const auto& st : kStates) {
    for (int tm : {-1, 1}) {
      const QuantumNumbers qn{st.n, st.kappa, tm, 1.0};
      const WaveFunction w = assemble_wavefunction(qn);
      for (double r : {0.01, 0.5, 2.0, 9.0}) {
        for (double t : {0.0, 0.4, 1.3, 2.9}) {
          for (double p : {0.0, 2.0}) {
            const double d = probability_density(w, r, t, p);
            CHECK(d >= 0.0);
            CHECK(d == doctest::Approx(probability_density_componentwise(w, r, t, p)).epsilon(1e-12));
            const Biquaternion prod = density_product(w, r, t, p);
            const cplx sc = prod.scalar_part();
            CHECK(std::abs(sc.imag()) <= 1e-12 * std::abs(sc));
            CHECK(std::abs(prod[1] + kI * sc) <= 1e-12 * std::abs(sc));
            CHECK(std::abs(prod[2]) <= 1e-12 * std::abs(sc));
            CHECK(std::abs(prod[3]) <= 1e-12 * std::abs(sc));
            CHECK(d == doctest::Approx(norm_sq(w.value(r, t, p))).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("ground-state radial shape: rise then monotone decay") {
  const WaveFunction w = assemble_wavefunction({1, -1, 1, 1.0});
  double prev = 0.0;
  bool falling = false;
  for (int i = 1; i <= 400; ++i) {
    const double r = 0.025 * i;
    const double f = w.radial().F_at(r);
    const double g = w.radial().G_at(r);
    const double radial_prob = f * f + g * g;
    if (radial_prob < prev) falling = true;
    if (falling) CHECK(radial_prob <= prev);
    prev = radial_prob;
  }
  CHECK(falling);
}

TEST_CASE("small component scales with Z alpha") {
  for (double Z : {0.01, 0.1, 1.0}) {
    const QuantumNumbers qn{2, -1, 1, Z};
    const RadialSolution sol(qn);
    const double rho_max = 80.0;
    const double f2 = quadrature_radial([&](double x) { return sol.F(x) * sol.F(x); }, 0.0, rho_max).value;
    const double g2 = quadrature_radial([&](double x) { return sol.G(x) * sol.G(x); }, 0.0, rho_max).value;
    const double ratio = std::sqrt(g2 / f2);
    const double za = Z * kFineStructure;
    CHECK(ratio > 0.1 * za);
    CHECK(ratio < za);
  }
}
