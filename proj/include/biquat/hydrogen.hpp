// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file hydrogen.hpp
 * @brief Relativistic one-electron atom: Sommerfeld energies, closed-form
 *        radial functions, the biquaternion wavefunction and its density.
 *
 * Units: hbar = c = m = 1 internally, energies in mc^2. Public radial
 * coordinates are in Bohr radii (r_natural = r_bohr / alpha).
 *
 * kappa is the usual Dirac quantum number (1s1/2: kappa = -1, 2p1/2:
 * kappa = +1, 2p3/2: kappa = -2), j = |kappa| - 1/2. The radial system is
 * written for r R = (F, G) as
 *
 *   -dG/dr - (k/r) G + (1 - E - Z alpha / r) F = 0
 *    dF/dr - (k/r) F - (1 + E + Z alpha / r) G = 0
 *
 * with k = -kappa. The closed-form solution in rho = C r,
 * C = sqrt(1 - E^2), s = sqrt(k^2 - (Z alpha)^2), n_r = n - |k|, is
 *
 *   F = rho^s e^{-rho} [ (s - k) 2 rho L_{n_r-1}^{2s+1}(2 rho) - Z alpha X L_{n_r}^{2s-1}(2 rho) ]
 *   G = rho^s e^{-rho} [ Z alpha 2 rho L_{n_r-1}^{2s+1}(2 rho) - (s - k) X L_{n_r}^{2s-1}(2 rho) ]
 *
 * with X = (s + k E)/C and L_{-1} = 0. Writing the coefficient as
 * (s - k E)/C with a plus sign (ClosedForm::SwappedCoefficient) makes both
 * functions vanish identically in the ground state.
 */

#pragma once

#include <array>
#include <functional>
#include <span>
#include <vector>

#include "biquat/biquaternion.hpp"
#include "biquat/special_functions.hpp"
#include "biquat/spinor.hpp"

namespace biquat {

struct QuantumNumbers {
  int n = 1;          ///< principal, >= 1
  int kappa = -1;     ///< Dirac quantum number, nonzero, |kappa| <= n
  int twice_mj = 1;   ///< 2 m_j, odd, |m_j| <= j
  double Z = 1.0;     ///< nuclear charge

  int twice_j() const;
  int radial_index() const;  ///< n - |kappa|
  /// Orbital l of the large (upper) component: l(kappa).
  int l_upper() const;
  /// Orbital l of the small (lower) component: l(-kappa).
  int l_lower() const;
};

/// Orbital angular momentum belonging to kappa: -kappa - 1 for kappa < 0,
/// kappa for kappa > 0.
int orbital_l(int kappa);

/// Throws DomainError unless n >= 1, kappa != 0, |kappa| <= n, kappa < 0
/// when n = |kappa|, Z >= 0 and Z alpha < |kappa| ("s imaginary").
void validate_levels(int n, int kappa, double Z);
/// validate_levels plus the m_j constraints and Z > 0.
void validate(const QuantumNumbers& qn);

/// E / mc^2 = [1 + (Z alpha / (n - |kappa| + s))^2]^{-1/2}.
double energy(int n, int kappa, double Z);
double energy(const QuantumNumbers& qn);
/// E / mc^2 - 1, evaluated without cancellation.
double binding_energy(int n, int kappa, double Z);
double binding_energy(const QuantumNumbers& qn);

struct RadialParameters {
  double s;             ///< sqrt(kappa^2 - (Z alpha)^2)
  double C;             ///< sqrt(1 - E^2), inverse natural length
  double rho_per_bohr;  ///< rho per Bohr radius, C / alpha
};

/// Throws DomainError if |E| >= 1 or s is imaginary.
RadialParameters radial_parameters(const QuantumNumbers& qn, double energy_mc2);

/// Sign of k used in the radial system relative to kappa.
enum class KSign {
  Standard,  ///< k = -kappa (solves the system)
  Flipped,   ///< k = +kappa
};

enum class ClosedForm { Standard, SwappedCoefficient };

struct RadialConvention {
  KSign k_sign = KSign::Standard;
  ClosedForm form = ClosedForm::Standard;
};

/// Unnormalized closed-form (F, G) for one state at a given energy.
class RadialSolution {
 public:
  /// Uses the Sommerfeld energy of qn.
  explicit RadialSolution(const QuantumNumbers& qn, RadialConvention conv = {});
  /// Uses E = 1 + binding (binding in mc^2). Lets callers probe energies
  /// that are not eigenvalues.
  RadialSolution(const QuantumNumbers& qn, double binding, RadialConvention conv);

  double F(double rho) const;
  double G(double rho) const;
  /// Polynomial factors: F = rho^s e^{-rho} f(rho), G = rho^s e^{-rho} g(rho).
  double f_reduced(double rho) const;
  double g_reduced(double rho) const;

  double F_at(double r_bohr) const { return F(rho_at(r_bohr)); }
  double G_at(double r_bohr) const { return G(rho_at(r_bohr)); }
  double rho_at(double r_bohr) const { return params_.rho_per_bohr * r_bohr; }

  const RadialParameters& parameters() const { return params_; }
  double energy() const { return 1.0 + binding_; }
  double binding() const { return binding_; }
  double k() const { return k_; }
  double z_alpha() const { return z_alpha_; }
  int radial_index() const { return nr_; }

 private:
  double prefactor(double rho) const;

  RadialParameters params_{};
  double binding_;
  double k_;
  double z_alpha_;
  int nr_;
  double x_coeff_;
  ClosedForm form_;
};

/// Closed-form F and G of the state at its Sommerfeld energy.
double radial_F(const QuantumNumbers& qn, double rho);
double radial_G(const QuantumNumbers& qn, double rho);

struct Residuals {
  std::vector<double> first;   ///< -dG/dr - (k/r) G + (1 - E - Z alpha/r) F
  std::vector<double> second;  ///< dF/dr - (k/r) F - (1 + E + Z alpha/r) G
  double max_abs() const;
};

/// Residuals of the closed form at energy 1 + binding on a strictly
/// positive, ascending grid of radii in Bohr. Each entry is |sum of terms| /
/// sum of |terms|; derivatives come from 5-point finite differences of the
/// polynomial factors with the prefactor's log-derivative applied exactly.
Residuals ode_residual(const QuantumNumbers& qn, double binding, std::span<const double> r_bohr,
                       RadialConvention conv = {});

/// Same normalized residual for arbitrary functions F(r), G(r) of the Bohr
/// radius, differentiated by 5-point finite differences with step 1e-3 r.
Residuals ode_residual(const std::function<double(double)>& F, const std::function<double(double)>& G,
                       double k, double Z, double binding, std::span<const double> r_bohr);

struct EnergyBracket {
  double lo;  ///< binding energy (mc^2), more negative end
  double hi;
};

/// Bracket around the nonrelativistic level of n: binding in
/// [-(Z alpha)^2 / (2 (n - 1/2)^2), -(Z alpha)^2 / (2 (n + 1/2)^2)].
EnergyBracket nonrelativistic_bracket(int n, double Z);

struct ShootingOptions {
  double relative_tolerance = 1e-12;  ///< on the binding energy
  double ode_tolerance = 1e-13;
  int max_iterations = 200;
};

struct ShootingResult {
  double energy;   ///< mc^2
  double binding;  ///< mc^2
  int iterations;
};

/// Integrates the radial system outward from the origin (F ~ r^s) and
/// inward from the exponential tail, and bisects the normalized Wronskian
/// mismatch at the matching radius. Throws NumericalError if the mismatch
/// does not change sign on the bracket.
ShootingResult shoot_eigenvalue(int n, int kappa, double Z, EnergyBracket bracket,
                                ShootingOptions opts = {});

/// Assembled state. psi = (A/r) [F y_upper + i G y_lower].
class WaveFunction {
 public:
  const QuantumNumbers& quantum_numbers() const { return qn_; }
  const RadialSolution& radial() const { return radial_; }
  const SpinorFunction& upper() const { return upper_; }
  const SpinorFunction& lower() const { return lower_; }
  /// A, fixed by requiring the all-space probability to be 1.
  double normalization() const { return norm_; }
  /// Clebsch-Gordan factors (C1, C2, C3, C4): upper then lower spinor.
  std::array<double, 4> coefficients() const;

  /// Single-biquaternion form.
  Biquaternion value(double r_bohr, double theta, double phi) const;
  /// Two-spinor form: ((A/r) F y_upper, (A/r) i G y_lower), each a biquaternion.
  std::array<Biquaternion, 2> components(double r_bohr, double theta, double phi) const;
  /// Radius beyond which the density is below double-precision relevance.
  double outer_radius() const;

 private:
  friend WaveFunction assemble_wavefunction(const QuantumNumbers& qn);
  WaveFunction(const QuantumNumbers& qn, RadialSolution radial, SpinorFunction upper,
               SpinorFunction lower, double norm)
      : qn_(qn), radial_(radial), upper_(upper), lower_(lower), norm_(norm) {}

  QuantumNumbers qn_;
  RadialSolution radial_;
  SpinorFunction upper_;
  SpinorFunction lower_;
  double norm_;
};

WaveFunction assemble_wavefunction(const QuantumNumbers& qn);

/// Sc(psi-bar* psi) from the biquaternion form, per Bohr^3.
double probability_density(const WaveFunction& w, double r_bohr, double theta, double phi);

/// (A^2/r^2)(C1^2 |Y1|^2 F^2 + C2^2 |Y2|^2 F^2 + C3^2 |Y3|^2 G^2 + C4^2 |Y4|^2 G^2).
double probability_density_componentwise(const WaveFunction& w, double r_bohr, double theta, double phi);

/// Full product psi-bar* psi. psi lies in the left ideal spanned by q_+,
/// q_-, so this equals Sc * (e0 - i e1).
Biquaternion density_product(const WaveFunction& w, double r_bohr, double theta, double phi);

struct ProbabilityResult {
  double value;
  double error_estimate;
};

/// Probability of r in [r_lo, r_hi] (Bohr; r_hi may be +inf). The density
/// separates as F^2 |y_upper|^2 + G^2 |y_lower|^2, so the sphere integrals
/// of both spinor densities are taken once with `grid` and combined with
/// adaptive radial integrals of F^2 and G^2.
ProbabilityResult probability_in_region(const WaveFunction& w, double r_lo, double r_hi,
                                        SphereGrid grid = {});

}  // namespace biquat
