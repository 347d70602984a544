// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/hydrogen.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "biquat/errors.hpp"
#include "biquat/spin_half.hpp"

namespace biquat {

namespace {

double s_parameter(int kappa, double Z) {
  const double za = Z * kFineStructure;
  const double d = static_cast<double>(kappa) * kappa - za * za;
  if (!(d > 0.0)) throw DomainError("s imaginary: Z alpha >= |kappa|");
  return std::sqrt(d);
}

// Five-point central difference.
template <typename F>
double derivative5(const F& f, double x, double h) {
  return (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h);
}

double normalized(double a, double b, double c, double d) {
  const double scale = std::abs(a) + std::abs(b) + std::abs(c) + std::abs(d);
  return scale == 0.0 ? 0.0 : std::abs(a + b + c + d) / scale;
}

}  // namespace

int orbital_l(int kappa) { return kappa < 0 ? -kappa - 1 : kappa; }

int QuantumNumbers::twice_j() const { return 2 * std::abs(kappa) - 1; }
int QuantumNumbers::radial_index() const { return n - std::abs(kappa); }
int QuantumNumbers::l_upper() const { return orbital_l(kappa); }
int QuantumNumbers::l_lower() const { return orbital_l(-kappa); }

void validate_levels(int n, int kappa, double Z) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (kappa == 0) throw DomainError("kappa must be nonzero");
  if (std::abs(kappa) > n) throw DomainError("|kappa| must not exceed n");
  if (std::abs(kappa) == n && kappa > 0) throw DomainError("kappa must be negative when n = |kappa|");
  if (!(Z >= 0.0) || !std::isfinite(Z)) throw DomainError("Z must be finite and nonnegative");
  (void)s_parameter(kappa, Z);
}

void validate(const QuantumNumbers& qn) {
  validate_levels(qn.n, qn.kappa, qn.Z);
  if (!(qn.Z > 0.0)) throw DomainError("Z must be positive for a bound state");
  if (qn.twice_mj % 2 == 0) throw DomainError("m_j must be a half-integer");
  if (std::abs(qn.twice_mj) > qn.twice_j()) throw DomainError("|m_j| must not exceed j");
}

double binding_energy(int n, int kappa, double Z) {
  validate_levels(n, kappa, Z);
  const double s = s_parameter(kappa, Z);
  const double t = Z * kFineStructure / ((n - std::abs(kappa)) + s);
  return std::expm1(-0.5 * std::log1p(t * t));
}

double energy(int n, int kappa, double Z) { return 1.0 + binding_energy(n, kappa, Z); }
double energy(const QuantumNumbers& qn) { return energy(qn.n, qn.kappa, qn.Z); }
double binding_energy(const QuantumNumbers& qn) { return binding_energy(qn.n, qn.kappa, qn.Z); }

RadialParameters radial_parameters(const QuantumNumbers& qn, double energy_mc2) {
  if (!(std::abs(energy_mc2) < 1.0)) throw DomainError("bound state needs |E| < mc^2");
  const double s = s_parameter(qn.kappa, qn.Z);
  const double C = std::sqrt((1.0 - energy_mc2) * (1.0 + energy_mc2));
  return {s, C, C / kFineStructure};
}

RadialSolution::RadialSolution(const QuantumNumbers& qn, RadialConvention conv)
    : RadialSolution(qn, binding_energy(qn), conv) {}

RadialSolution::RadialSolution(const QuantumNumbers& qn, double binding, RadialConvention conv)
    : binding_(binding),
      k_(conv.k_sign == KSign::Standard ? -qn.kappa : qn.kappa),
      z_alpha_(qn.Z * kFineStructure),
      nr_(qn.n - std::abs(qn.kappa)),
      form_(conv.form) {
  validate_levels(qn.n, qn.kappa, qn.Z);
  if (!(binding < 0.0 && binding > -2.0)) throw DomainError("bound state needs |E| < mc^2");
  const double s = s_parameter(qn.kappa, qn.Z);
  const double C = std::sqrt(-binding * (2.0 + binding));
  params_ = {s, C, C / kFineStructure};
  const double E = 1.0 + binding;
  x_coeff_ = form_ == ClosedForm::Standard ? (s + k_ * E) / C : (s - k_ * E) / C;
}

double RadialSolution::prefactor(double rho) const {
  if (rho <= 0.0) return 0.0;
  return std::exp(params_.s * std::log(rho) - rho);
}

double RadialSolution::f_reduced(double rho) const {
  const double s = params_.s;
  const double l1 = 2.0 * rho * laguerre_or_zero(nr_ - 1, 2.0 * s + 1.0, 2.0 * rho);
  const double l2 = laguerre(nr_, 2.0 * s - 1.0, 2.0 * rho);
  if (form_ == ClosedForm::Standard) return (s - k_) * l1 - z_alpha_ * x_coeff_ * l2;
  return (s - k_) * l1 + z_alpha_ * x_coeff_ * l2;
}

double RadialSolution::g_reduced(double rho) const {
  const double s = params_.s;
  const double l1 = 2.0 * rho * laguerre_or_zero(nr_ - 1, 2.0 * s + 1.0, 2.0 * rho);
  const double l2 = laguerre(nr_, 2.0 * s - 1.0, 2.0 * rho);
  if (form_ == ClosedForm::Standard) return z_alpha_ * l1 - (s - k_) * x_coeff_ * l2;
  return z_alpha_ * l1 + (s - k_) * x_coeff_ * l2;
}

double RadialSolution::F(double rho) const { return prefactor(rho) * f_reduced(rho); }
double RadialSolution::G(double rho) const { return prefactor(rho) * g_reduced(rho); }

double radial_F(const QuantumNumbers& qn, double rho) { return RadialSolution(qn).F(rho); }
double radial_G(const QuantumNumbers& qn, double rho) { return RadialSolution(qn).G(rho); }

double Residuals::max_abs() const {
  double m = 0.0;
  for (double v : first) m = std::max(m, std::abs(v));
  for (double v : second) m = std::max(m, std::abs(v));
  return m;
}

Residuals ode_residual(const QuantumNumbers& qn, double binding, std::span<const double> r_bohr,
                       RadialConvention conv) {
  const RadialSolution sol(qn, binding, conv);
  const double s = sol.parameters().s;
  const double C = sol.parameters().C;
  const double k = sol.k();
  const double za = sol.z_alpha();
  const auto f = [&](double x) { return sol.f_reduced(x); };
  const auto g = [&](double x) { return sol.g_reduced(x); };

  Residuals out;
  out.first.reserve(r_bohr.size());
  out.second.reserve(r_bohr.size());
  double prev = 0.0;
  for (double r : r_bohr) {
    if (!(r > prev)) throw DomainError("residual grid must be strictly positive and ascending");
    prev = r;
    const double rho = sol.rho_at(r);
    const double h = 1e-2 * std::max(1.0, rho);
    const double fv = f(rho);
    const double gv = g(rho);
    // Everything below is divided by C rho^s e^{-rho}.
    const double dF = (s / rho - 1.0) * fv + derivative5(f, rho, h);
    const double dG = (s / rho - 1.0) * gv + derivative5(g, rho, h);
    out.first.push_back(normalized(-dG, -(k / rho) * gv, (-binding / C) * fv, -(za / rho) * fv));
    out.second.push_back(normalized(dF, -(k / rho) * fv, -((2.0 + binding) / C) * gv, -(za / rho) * gv));
  }
  return out;
}

Residuals ode_residual(const std::function<double(double)>& F, const std::function<double(double)>& G,
                       double k, double Z, double binding, std::span<const double> r_bohr) {
  constexpr double a = kFineStructure;
  const double za = Z * a;
  Residuals out;
  double prev = 0.0;
  for (double r : r_bohr) {
    if (!(r > prev)) throw DomainError("residual grid must be strictly positive and ascending");
    prev = r;
    const double h = 1e-3 * r;
    const double fv = F(r);
    const double gv = G(r);
    // d/dr_natural = alpha d/dr_bohr, 1/r_natural = alpha / r_bohr.
    const double dF = a * derivative5(F, r, h);
    const double dG = a * derivative5(G, r, h);
    out.first.push_back(normalized(-dG, -(k * a / r) * gv, -binding * fv, -(za * a / r) * fv));
    out.second.push_back(normalized(dF, -(k * a / r) * fv, -(2.0 + binding) * gv, -(za * a / r) * gv));
  }
  return out;
}

EnergyBracket nonrelativistic_bracket(int n, double Z) {
  if (n < 1) throw DomainError("n must be >= 1");
  const double za2 = Z * kFineStructure * Z * kFineStructure;
  return {-za2 / (2.0 * (n - 0.5) * (n - 0.5)), -za2 / (2.0 * (n + 0.5) * (n + 0.5))};
}

namespace {

using State = std::array<double, 2>;

// Radial system in u = Z alpha r (natural r), P = F, Q = G:
//   dP/du = -kappa/u P + ((2 + b)/(Z alpha) + Z alpha/u) Q
//   dQ/du =  kappa/u Q - (b/(Z alpha) + Z alpha/u) P
struct RadialSystem {
  double kappa;
  double za;
  double b;

  void operator()(const State& y, State& dy, double u) const {
    dy[0] = -kappa / u * y[0] + ((2.0 + b) / za + za / u) * y[1];
    dy[1] = kappa / u * y[1] - (b / za + za / u) * y[0];
  }
};

void renormalize(State& y) {
  const double n = std::hypot(y[0], y[1]);
  y[0] /= n;
  y[1] /= n;
}

State integrate_segments(const RadialSystem& sys, State y, double from, double to, double tol) {
  namespace odeint = boost::numeric::odeint;
  constexpr int kSegments = 64;
  auto stepper = odeint::make_controlled(tol, tol, odeint::runge_kutta_fehlberg78<State>());
  // Geometric spacing when both ends share a sign and differ by decades,
  // uniform otherwise.
  const bool geometric = from > 0.0 && to > 0.0 && std::max(from, to) / std::min(from, to) > 100.0;
  double a = from;
  for (int i = 1; i <= kSegments; ++i) {
    const double t = static_cast<double>(i) / kSegments;
    const double b = geometric ? from * std::pow(to / from, t) : from + (to - from) * t;
    odeint::integrate_adaptive(stepper, sys, y, a, b, (b - a) * 1e-3);
    renormalize(y);
    a = b;
  }
  return y;
}

}  // namespace

ShootingResult shoot_eigenvalue(int n, int kappa, double Z, EnergyBracket bracket, ShootingOptions opts) {
  validate_levels(n, kappa, Z);
  if (!(Z > 0.0)) throw DomainError("Z must be positive for a bound state");
  if (!(bracket.lo < bracket.hi && bracket.hi < 0.0 && bracket.lo > -2.0)) {
    throw DomainError("energy bracket must satisfy -2 < lo < hi < 0 (binding, mc^2)");
  }
  const double za = Z * kFineStructure;
  const double s = s_parameter(kappa, Z);
  const double u0 = 1e-6;
  const double u_match = static_cast<double>(n) * n;

  const auto mismatch = [&](double b) {
    const RadialSystem sys{static_cast<double>(kappa), za, b};
    State out{1.0, (s + kappa) / za};
    renormalize(out);
    out = integrate_segments(sys, out, u0, u_match, opts.ode_tolerance);

    const double C = std::sqrt(-b * (2.0 + b));
    const double decay = C / za;  // per unit u
    const double u_max = u_match + 45.0 / decay;
    State in{1.0, -C / (2.0 + b)};
    renormalize(in);
    in = integrate_segments(sys, in, u_max, u_match, opts.ode_tolerance);
    return out[0] * in[1] - in[0] * out[1];
  };

  double lo = bracket.lo;
  double hi = bracket.hi;
  double d_lo = mismatch(lo);
  const double d_hi = mismatch(hi);
  if (d_lo * d_hi > 0.0) {
    std::ostringstream msg;
    msg << "no sign change of the matching function on [" << lo << ", " << hi << "] for n=" << n
        << " kappa=" << kappa << " Z=" << Z;
    throw NumericalError(msg.str());
  }
  int it = 0;
  while (it < opts.max_iterations) {
    ++it;
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= opts.relative_tolerance * std::abs(mid)) break;
    const double d_mid = mismatch(mid);
    if (d_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((d_mid < 0.0) == (d_lo < 0.0)) {
      lo = mid;
      d_lo = d_mid;
    } else {
      hi = mid;
    }
  }
  if (it >= opts.max_iterations) throw NumericalError("bisection did not reach the requested tolerance");
  const double b = 0.5 * (lo + hi);
  return {1.0 + b, b, it};
}

std::array<double, 4> WaveFunction::coefficients() const {
  return {upper_.c1(), upper_.c2(), lower_.c1(), lower_.c2()};
}

std::array<Biquaternion, 2> WaveFunction::components(double r_bohr, double theta, double phi) const {
  const double scale = norm_ / r_bohr;
  const Biquaternion yu = spinor_as_biquaternion(upper_, theta, phi);
  const Biquaternion yl = spinor_as_biquaternion(lower_, theta, phi);
  return {(scale * radial_.F_at(r_bohr)) * yu, (kI * (scale * radial_.G_at(r_bohr))) * yl};
}

Biquaternion WaveFunction::value(double r_bohr, double theta, double phi) const {
  const auto c = components(r_bohr, theta, phi);
  return c[0] + c[1];
}

double WaveFunction::outer_radius() const {
  return (60.0 + 10.0 * qn_.n) / radial_.parameters().rho_per_bohr;
}

WaveFunction assemble_wavefunction(const QuantumNumbers& qn) {
  validate(qn);
  const RadialSolution radial(qn);
  const SpinorFunction upper(qn.l_upper(), qn.twice_j(), qn.twice_mj);
  const SpinorFunction lower(qn.l_lower(), qn.twice_j(), qn.twice_mj);
  const double rho_max = 60.0 + 10.0 * qn.n;
  const auto integrand = [&](double rho) {
    const double f = radial.F(rho);
    const double g = radial.G(rho);
    return f * f + g * g;
  };
  const QuadratureResult q = quadrature_radial(integrand, 0.0, rho_max);
  const double norm = std::sqrt(radial.parameters().rho_per_bohr / q.value);
  return WaveFunction(qn, radial, upper, lower, norm);
}

Biquaternion density_product(const WaveFunction& w, double r_bohr, double theta, double phi) {
  const Biquaternion psi = w.value(r_bohr, theta, phi);
  return conj_both(psi) * psi;
}

double probability_density(const WaveFunction& w, double r_bohr, double theta, double phi) {
  return density_product(w, r_bohr, theta, phi).scalar_part().real();
}

double probability_density_componentwise(const WaveFunction& w, double r_bohr, double theta, double phi) {
  const auto ysq = [&](int l, int m) {
    return std::abs(m) > l ? 0.0 : std::norm(spherical_harmonic(l, m, theta, phi));
  };
  const SpinorFunction& u = w.upper();
  const SpinorFunction& d = w.lower();
  const auto c = w.coefficients();
  const double F = w.radial().F_at(r_bohr);
  const double G = w.radial().G_at(r_bohr);
  const double a2 = w.normalization() * w.normalization() / (r_bohr * r_bohr);
  return a2 * (c[0] * c[0] * ysq(u.l(), u.m_up()) * F * F + c[1] * c[1] * ysq(u.l(), u.m_down()) * F * F +
               c[2] * c[2] * ysq(d.l(), d.m_up()) * G * G + c[3] * c[3] * ysq(d.l(), d.m_down()) * G * G);
}

ProbabilityResult probability_in_region(const WaveFunction& w, double r_lo, double r_hi, SphereGrid grid) {
  if (!(r_lo >= 0.0) || !(r_hi > r_lo)) throw DomainError("probability region needs 0 <= r_lo < r_hi");
  const double hi = std::min(r_hi, w.outer_radius());
  if (r_lo >= hi) return {0.0, 0.0};

  const double upper = quadrature_sphere(
      [&](double th, double ph) { return spinor_density(w.upper(), th, ph); }, grid);
  const double lower = quadrature_sphere(
      [&](double th, double ph) { return spinor_density(w.lower(), th, ph); }, grid);

  const RadialSolution& rad = w.radial();
  const double rpb = rad.parameters().rho_per_bohr;
  const double rho_lo = r_lo * rpb;
  const double rho_hi = hi * rpb;
  RadialQuadratureOptions opts;
  const QuadratureResult f2 = quadrature_radial(
      [&](double rho) {
        const double f = rad.F(rho);
        return f * f;
      },
      rho_lo, rho_hi, opts);
  const QuadratureResult g2 = quadrature_radial(
      [&](double rho) {
        const double g = rad.G(rho);
        return g * g;
      },
      rho_lo, rho_hi, opts);
  const double a2 = w.normalization() * w.normalization() / rpb;
  return {a2 * (upper * f2.value + lower * g2.value),
          a2 * (upper * f2.error_estimate + lower * g2.error_estimate)};
}

}  // namespace biquat
