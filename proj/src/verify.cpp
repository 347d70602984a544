// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>

#include "biquat/biquaternion.hpp"
#include "biquat/errors.hpp"
#include "biquat/hydrogen.hpp"
#include "biquat/matrix_bridge.hpp"
#include "biquat/oracle.hpp"
#include "biquat/pauli_dirac.hpp"
#include "biquat/special_functions.hpp"
#include "biquat/spin_half.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

namespace {

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

class Recorder {
 public:
  Recorder(std::string suite, std::uint64_t seed, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), seed_(seed), out_(out) {}

  std::mt19937_64 rng() {
    ++salt_;
    return std::mt19937_64(seed_ * 0x9E3779B97F4A7C15ULL + salt_);
  }
  std::uint64_t seed() const { return seed_; }

  void add(std::string name, double deviation, double tolerance) {
    out_.push_back({suite_, std::move(name), deviation, tolerance, deviation <= tolerance});
  }
  void add(const OracleReport& r) { add("oracle/" + r.identity, r.max_deviation, r.tolerance); }

 private:
  std::string suite_;
  std::uint64_t seed_;
  std::uint64_t salt_ = 0;
  std::vector<CheckResult>& out_;
};

void algebra_suite(Recorder& rec) {
  {
    auto rng = rec.rng();
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_biquaternion(rng);
      const auto b = random_biquaternion(rng);
      const auto c = random_biquaternion(rng);
      dev = std::max(dev, max_abs_diff((a * b) * c, a * (b * c)));
    }
    rec.add("associativity", dev, 1e-12);
  }
  rec.add("noncommutativity e1 e2 = -e2 e1 = e3",
          std::max(max_abs_diff(e1 * e2, -(e2 * e1)), max_abs_diff(e1 * e2, e3)), 0.0);
  {
    auto rng = rec.rng();
    double dev_norm = 0.0;
    double dev_conj = 0.0;
    double dev_vec = 0.0;
    double dev_parts = 0.0;
    double dev_inv = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_biquaternion(rng);
      const auto b = random_biquaternion(rng);
      double euclid = 0.0;
      for (std::size_t k = 0; k < 4; ++k) euclid += a[k].real() * a[k].real() + a[k].imag() * a[k].imag();
      dev_norm = std::max(dev_norm, std::abs(norm_sq(a) - euclid));
      dev_conj = std::max(dev_conj, max_abs_diff(conj_both(a * b), conj_both(b) * conj_both(a)));
      dev_vec = std::max(dev_vec, max_abs_diff(conj_vec(a * b), conj_vec(b) * conj_vec(a)));
      const ProductParts p = decompose(a, b);
      dev_parts = std::max(dev_parts, max_abs_diff(Biquaternion::scalar(p.scalar) + p.vector, a * b));
      if (std::abs(quadratic_form(a)) > 1e-2) {
        dev_inv = std::max(dev_inv, max_abs_diff(a * inverse(a), e0) / 1e2);
      }
    }
    rec.add("norm_sq equals 8-vector Euclidean norm", dev_norm, 1e-14);
    rec.add("conj_both anti-automorphism", dev_conj, 1e-12);
    rec.add("conj_vec anti-automorphism", dev_vec, 1e-12);
    rec.add("decompose reassembles product", dev_parts, 1e-14);
    rec.add("inverse off the null cone", dev_inv, 1e-12);
  }
  {
    auto rng = rec.rng();
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double dev = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const RealQuaternion a{u(rng), u(rng), u(rng), u(rng)};
      const RealQuaternion b{u(rng), u(rng), u(rng), u(rng)};
      dev = std::max(dev, std::abs((a * b).norm_sq() - a.norm_sq() * b.norm_sq()));
    }
    rec.add("real quaternion norm multiplicativity", dev, 1e-12);
  }
  {
    const Biquaternion null_element = e0 + kI * e1;
    rec.add("e0 + i e1 is a zero divisor", is_zero_divisor(null_element) ? 0.0 : 1.0, 0.0);
    const Biquaternion up = SpinState::up().value();
    const bool singular = std::abs(to_matrix_linear(up).det()) < kAlgebraTol;
    rec.add("q_+ is a zero divisor with singular matrix image", is_zero_divisor(up) && singular ? 0.0 : 1.0, 0.0);
    rec.add("e0 is not a zero divisor", is_zero_divisor(e0) ? 1.0 : 0.0, 0.0);
  }
  rec.add(matrix_oracle_check("homomorphism", 1000, rec.seed()));
  rec.add(matrix_oracle_check("bijection", 1000, rec.seed()));
  rec.add(matrix_oracle_check("conjugating-subspace", 200, rec.seed()));
  rec.add(matrix_oracle_check("norm-determinant", 200, rec.seed()));
}

void spin_suite(Recorder& rec) {
  const Biquaternion up = SpinState::up().value();
  const Biquaternion down = SpinState::down().value();
  const auto sx = spin_operator(Axis::X);
  const auto sy = spin_operator(Axis::Y);
  const auto sz = spin_operator(Axis::Z);
  const auto dev = [](const Biquaternion& a, const Biquaternion& b) { return max_abs_diff(a, b); };
  rec.add("Sx q+ = (1/2) q-", dev(apply(sx, SpinState::up()), 0.5 * down), 1e-14);
  rec.add("Sx q- = (1/2) q+", dev(apply(sx, SpinState::down()), 0.5 * up), 1e-14);
  rec.add("Sy q+ = (i/2) q-", dev(apply(sy, SpinState::up()), (0.5 * kI) * down), 1e-14);
  rec.add("Sy q- = -(i/2) q+", dev(apply(sy, SpinState::down()), (-0.5 * kI) * up), 1e-14);
  rec.add("Sz q+ = (1/2) q+", dev(apply(sz, SpinState::up()), 0.5 * up), 1e-14);
  rec.add("Sz q- = -(1/2) q-", dev(apply(sz, SpinState::down()), -0.5 * down), 1e-14);

  rec.add("orthonormal spin basis",
          std::max({std::abs(inner(up, up) - 1.0), std::abs(inner(down, down) - 1.0), std::abs(inner(up, down))}),
          1e-14);

  double pauli = 0.0;
  for (Axis a : kAxes) {
    for (Axis b : kAxes) {
      if (a == b) continue;
      const Axis c = third_axis(a, b);
      const Biquaternion ab = pauli_quaternion(a) * pauli_quaternion(b);
      const Biquaternion expected = (kI * static_cast<double>(levi_civita(a, b, c))) * pauli_quaternion(c);
      pauli = std::max({pauli, dev(ab, expected), dev(ab, -(pauli_quaternion(b) * pauli_quaternion(a)))});
    }
    pauli = std::max(pauli, dev(pauli_quaternion(a) * pauli_quaternion(a), e0));
  }
  rec.add("Pauli quaternion products", pauli, 1e-14);

  rec.add("outer products rebuild Sz = -i e1", dev(outer_reconstruct(Axis::Z), -kI * e1), 1e-14);
  rec.add("outer products rebuild Sx = -i e3", dev(outer_reconstruct(Axis::X), -kI * e3), 1e-14);
  rec.add("outer products rebuild Sy = -i e2", dev(outer_reconstruct(Axis::Y), -kI * e2), 1e-14);

  const Biquaternion raise = ladder(LadderSign::Raise);
  const Biquaternion lower = ladder(LadderSign::Lower);
  rec.add("ladder nilpotency", std::max(max_abs(raise * raise), max_abs(lower * lower)), 1e-14);
  rec.add("ladder transitions",
          std::max({dev(raise * down, up), dev(lower * up, down), max_abs(raise * up), max_abs(lower * down)}),
          1e-14);
  const Biquaternion qx = pauli_quaternion(Axis::X);
  const Biquaternion qy = pauli_quaternion(Axis::Y);
  rec.add("ladder from (qx +/- i qy)/2",
          std::max(dev(raise, 0.5 * (qx + kI * qy)), dev(lower, 0.5 * (qx - kI * qy))), 1e-14);

  for (const char* id : {"eigen-x", "eigen-y", "eigen-z", "pauli-products", "outer-products"}) {
    rec.add(matrix_oracle_check(id, 1, rec.seed()));
  }
  rec.add(matrix_oracle_check("ket-compatibility", 200, rec.seed()));
}

void rotation_suite(Recorder& rec) {
  double closed = 0.0;
  for (Axis n : kAxes) {
    for (Axis j : kAxes) {
      for (int a = 0; a < 32; ++a) {
        const double phi = 2.0 * kPi * a / 32.0;
        const Biquaternion lhs = rotate_operator(RotationOperator::about(n, phi), spin_operator(j));
        closed = std::max(closed, max_abs_diff(lhs, rotated_spin_closed_form(n, j, phi)));
      }
    }
  }
  rec.add("conjugation closed form, 9 pairs x 32 angles", closed, 1e-12);

  auto rng = rec.rng();
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> ang(-2.0 * kPi, 2.0 * kPi);
  double cover = 0.0;
  double additive = 0.0;
  double unit = 0.0;
  double full_turn = 0.0;
  double state = 0.0;
  for (int i = 0; i < 200; ++i) {
    std::array<double, 3> n{g(rng), g(rng), g(rng)};
    const double len = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    for (auto& x : n) x /= len;
    const double p1 = ang(rng);
    const double p2 = ang(rng);
    const auto d1 = rotation(n, p1);
    const auto d2 = rotation(n, p2);
    cover = std::max(cover, max_abs_diff(rotation(n, 2.0 * kPi).value(), -e0));
    additive = std::max(additive, max_abs_diff(d1.value() * d2.value(), rotation(n, p1 + p2).value()));
    unit = std::max(unit, std::abs(norm_sq(d1.value()) - 1.0));
    for (Axis j : kAxes) {
      const SpinOperator s = spin_operator(j);
      full_turn = std::max(full_turn, max_abs_diff(rotate_operator(rotation(n, 2.0 * kPi), s), 0.5 * s.value));
    }
    const Biquaternion psi = rotation(n, 2.0 * kPi).value() * SpinState::up().value();
    state = std::max(state, max_abs_diff(psi, -SpinState::up().value()));
  }
  rec.add("double cover D(n, 2 pi) = -e0", cover, 1e-12);
  rec.add("composition adds angles", additive, 1e-12);
  rec.add("norm_sq(D) = 1", unit, 1e-12);
  rec.add("full turn leaves operators unchanged", full_turn, 1e-12);
  rec.add("full turn negates states", state, 1e-12);
  rec.add(matrix_oracle_check("rotation-conjugation", 1000, rec.seed()));
}

void spinor_suite(Recorder& rec) {
  const SpinorFunction example(2, 5, 3);
  {
    auto rng = rec.rng();
    std::uniform_real_distribution<double> th(0.0, kPi);
    std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = th(rng);
      const double p = ph(rng);
      const double expected = 0.2 * std::norm(spherical_harmonic(2, 2, t, p));
      dev = std::max(dev, std::abs(measure_probability(SpinProjection::Down, example, t, p) - expected));
    }
    rec.add("down-state density = |Y_2^2|^2 / 5", dev, 1e-12);
  }
  const double down_total = quadrature_sphere(
      [&](double t, double p) { return measure_probability(SpinProjection::Down, example, t, p); });
  rec.add("down-state sphere integral = 1/5", std::abs(down_total - 0.2), 1e-8);

  double completeness = 0.0;
  double total = 0.0;
  double forms = 0.0;
  double ortho = 0.0;
  auto rng = rec.rng();
  std::uniform_real_distribution<double> th(0.0, kPi);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * kPi);
  const SphereGrid grid{24, 48};
  for (int l = 0; l <= 4; ++l) {
    std::vector<SpinorFunction> family;
    for (int tj : {2 * l - 1, 2 * l + 1}) {
      if (tj <= 0) continue;
      for (int tm = -tj; tm <= tj; tm += 2) family.emplace_back(l, tj, tm);
    }
    for (const auto& s : family) {
      for (int i = 0; i < 20; ++i) {
        const double t = th(rng);
        const double p = ph(rng);
        const double sum = measure_probability(SpinProjection::Up, s, t, p) +
                           measure_probability(SpinProjection::Down, s, t, p);
        completeness = std::max(completeness, std::abs(sum - spinor_density(s, t, p)));
        forms = std::max(forms, max_abs_diff(ket_to_vector(spinor_as_biquaternion(s, t, p)),
                                             spinor_as_vector(s, t, p)));
      }
      total = std::max(total, std::abs(quadrature_sphere([&](double t, double p) { return spinor_density(s, t, p); },
                                                         grid) -
                                       1.0));
    }
    for (std::size_t a = 0; a < family.size(); ++a) {
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        const cplx ip = quadrature_sphere_complex(
            [&](double t, double p) {
              return vdot(spinor_as_vector(family[a], t, p), spinor_as_vector(family[b], t, p));
            },
            grid);
        ortho = std::max(ortho, std::abs(ip));
      }
    }
  }
  rec.add("P_up + P_down = |y|^2", completeness, 1e-12);
  rec.add("sphere-integrated density = 1 (l <= 4)", total, 1e-8);
  rec.add("biquaternion and vector forms agree", forms, 1e-12);
  rec.add("orthogonality at fixed l", ortho, 1e-8);
}

struct State {
  int n;
  int kappa;
};
constexpr std::array<State, 6> kStates{{{1, -1}, {2, -1}, {2, 1}, {2, -2}, {3, -1}, {3, -2}}};

void hydrogen_suite(Recorder& rec) {
  double agreement = 0.0;
  double residual = 0.0;
  std::vector<double> radii;
  for (int i = 0; i < 300; ++i) radii.push_back(0.05 + (30.0 - 0.05) * i / 299.0);
  for (double Z : {1.0, 20.0, 50.0}) {
    for (const auto& st : kStates) {
      const double b = binding_energy(st.n, st.kappa, Z);
      const ShootingResult r = shoot_eigenvalue(st.n, st.kappa, Z, nonrelativistic_bracket(st.n, Z));
      agreement = std::max(agreement, std::abs(r.binding - b) / std::abs(b));
      const QuantumNumbers qn{st.n, st.kappa, 1, Z};
      residual = std::max(residual, ode_residual(qn, b, radii).max_abs());
    }
  }
  rec.add("Sommerfeld vs shooting, relative binding", agreement, 1e-8);
  rec.add("closed-form radial residual on [0.05, 30] Bohr", residual, 1e-6);

  double degeneracy = 0.0;
  double monotone = 0.0;
  for (double Z : {1.0, 20.0, 50.0, 90.0}) {
    for (int n = 2; n <= 6; ++n) {
      for (int k = 1; k < n; ++k) {
        degeneracy = std::max(degeneracy, std::abs(energy(n, k, Z) - energy(n, -k, Z)));
      }
      for (int k = 1; k < n; ++k) {
        monotone = std::max(monotone, std::max(0.0, energy(n - 1, -k, Z) - energy(n, -k, Z)));
      }
    }
  }
  rec.add("E(n, k) = E(n, -k)", degeneracy, 0.0);
  rec.add("E increases with n at fixed k", monotone, 0.0);

  rec.add("ground-state binding at Z=1 = -13.6059 eV",
          std::abs(binding_energy(1, -1, 1.0) * kElectronRestEnergyEv + 13.6059), 1e-3);
  const double split = (energy(2, -2, 1.0) - energy(2, 1, 1.0)) * kElectronRestEnergyEv;
  rec.add("2p3/2 - 2p1/2 splitting = 4.53e-5 eV (relative)", std::abs(split / 4.53e-5 - 1.0), 0.02);

  double norm = 0.0;
  double negative = 0.0;
  double residue = 0.0;
  double separated = 0.0;
  const SphereGrid coarse{16, 32};
  for (const auto& st : kStates) {
    const QuantumNumbers qn{st.n, st.kappa, 1, 1.0};
    const WaveFunction w = assemble_wavefunction(qn);
    const double r_max = w.outer_radius();
    const auto shell = [&](double r) {
      return r * r * quadrature_sphere([&](double t, double p) { return probability_density(w, r, t, p); }, coarse);
    };
    norm = std::max(norm, std::abs(quadrature_radial(shell, 0.0, r_max).value - 1.0));

    for (int i = 1; i <= 40; ++i) {
      const double r = r_max * std::pow(static_cast<double>(i) / 40.0, 3.0);
      for (int a = 0; a <= 8; ++a) {
        const double t = kPi * a / 8.0;
        const double p = 0.7 * a;
        const double d = probability_density(w, r, t, p);
        negative = std::max(negative, -d);
        const Biquaternion prod = density_product(w, r, t, p);
        const cplx sc = prod.scalar_part();
        const double scale = std::max(std::abs(sc), 1e-300);
        const double vec = std::max({std::abs(prod[1] + kI * sc), std::abs(prod[2]), std::abs(prod[3]),
                                     std::abs(sc.imag())});
        residue = std::max(residue, vec / scale);
        const double comp = probability_density_componentwise(w, r, t, p);
        separated = std::max(separated, std::abs(d - comp) / std::max(std::abs(comp), 1e-300));
      }
    }
  }
  rec.add("full-domain probability = 1 (six states, Z=1)", norm, 1e-6);
  rec.add("density nonnegative", negative, 0.0);
  rec.add("density product equals Sc (e0 - i e1)", residue, 1e-12);
  rec.add("scalar part equals componentwise sum", separated, 1e-12);

  const WaveFunction ground = assemble_wavefunction({1, -1, 1, 1.0});
  rec.add("ground state P(r < 1 Bohr) = 0.3233",
          std::abs(probability_in_region(ground, 0.0, 1.0).value - 0.3233), 1e-4);
  const double a = 2.5;
  const double inside = probability_in_region(ground, 0.0, a).value;
  const double outside = probability_in_region(ground, a, INFINITY).value;
  rec.add("[0, a] + [a, inf) = 1", std::abs(inside + outside - 1.0), 1e-8);
}

void dirac_suite(Recorder& rec) {
  auto rng = rec.rng();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto random_element = [&] {
    PauliAlgebraElement e;
    for (auto& x : e.q) x = u(rng);
    return e;
  };
  double image = 0.0;
  double product = 0.0;
  double hodge_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element();
    const auto b = random_element();
    image = std::max(image, max_abs_diff(to_matrix_linear(embed(a)), matrix_sum(a)));
    product = std::max(product, max_abs_diff(to_matrix_linear(embed(a) * embed(b)), matrix_sum(a) * matrix_sum(b)));
    hodge_dev = std::max(hodge_dev, max_abs_diff(to_matrix_linear(hodge() * embed(a)), -kI * matrix_sum(a)));
  }
  rec.add("embedding image equals matrix sum", image, 1e-14);
  rec.add("embedding preserves products", product, 1e-13);
  rec.add("Hodge element acts as -iI", hodge_dev, 1e-14);
  rec.add("hodge^2 = -e0", max_abs_diff(hodge() * hodge(), -e0), 0.0);

  double blocks = 0.0;
  for (int i = 0; i < 20; ++i) {
    DiracMatrix a;
    DiracMatrix b;
    for (auto& blk : a.blocks) blk = random_biquaternion(rng);
    for (auto& blk : b.blocks) blk = random_biquaternion(rng);
    blocks = std::max(blocks, max_abs_diff(expand(a * b), expand(a) * expand(b)));
  }
  rec.add("block product matches 4x4 product", blocks, 1e-12);

  ComplexMatrix4 g0;
  g0(0, 0) = 1.0;
  g0(1, 1) = 1.0;
  g0(2, 2) = -1.0;
  g0(3, 3) = -1.0;
  ComplexMatrix4 g2;
  g2(0, 3) = 1.0;
  g2(1, 2) = 1.0;
  g2(2, 1) = -1.0;
  g2(3, 0) = -1.0;
  rec.add("g(0) expands to diag(1, 1, -1, -1)", max_abs_diff(expand(gamma(0)), g0), 0.0);
  rec.add("g(2) expands to the anti-diagonal display", max_abs_diff(expand(gamma(2)), g2), 0.0);

  const CliffordReport cliff = verify_clifford(GammaVariant::Standard);
  for (const auto& e : cliff.entries) {
    rec.add("{g" + std::to_string(e.mu) + ", g" + std::to_string(e.nu) + "} = " +
                std::to_string(static_cast<int>(e.expected)) + " I4",
            e.deviation, cliff.tolerance);
  }
}

using SuiteFn = void (*)(Recorder&);
constexpr std::array<std::pair<const char*, SuiteFn>, 6> kSuites{{
    {"algebra", algebra_suite},
    {"spin", spin_suite},
    {"rotation", rotation_suite},
    {"spinor", spinor_suite},
    {"hydrogen", hydrogen_suite},
    {"dirac", dirac_suite},
}};

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"algebra", "spin", "rotation", "spinor", "hydrogen", "dirac", "all"};
  return names;
}

SuiteReport run_suite(std::string_view suite, std::uint64_t seed) {
  SuiteReport report{std::string(suite), seed, {}};
  bool found = false;
  for (const auto& [name, fn] : kSuites) {
    if (suite == "all" || suite == name) {
      Recorder rec(name, seed, report.checks);
      fn(rec);
      found = true;
    }
  }
  if (!found) throw UsageError("unknown suite: " + std::string(suite));
  return report;
}

}  // namespace biquat
