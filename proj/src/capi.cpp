// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/biquat.h"

#include <cmath>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <utility>

#include "biquat/errors.hpp"
#include "biquat/hydrogen.hpp"
#include "biquat/spin_half.hpp"
#include "biquat/spinor.hpp"
#include "biquat/verify.hpp"

struct bq_wavefunction {
  biquat::WaveFunction value;
};

struct bq_report {
  biquat::SuiteReport value;
};

namespace {

thread_local std::string g_last_error;

bq_status fail(bq_status code, std::string message) {
  g_last_error = std::move(message);
  return code;
}

template <typename F>
bq_status guarded(F&& body) {
  try {
    body();
    return BQ_OK;
  } catch (const biquat::UsageError& e) {
    return fail(BQ_ERR_USAGE, e.what());
  } catch (const biquat::DomainError& e) {
    return fail(BQ_ERR_DOMAIN, e.what());
  } catch (const biquat::NumericalError& e) {
    return fail(BQ_ERR_NUMERICAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(BQ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(BQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(BQ_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw biquat::UsageError(std::string(what) + " must not be null");
}

template <typename T>
void put(T* dst, T v) {
  if (dst != nullptr) *dst = v;
}

bq_quat to_c(const biquat::Biquaternion& q) {
  bq_quat out;
  for (std::size_t k = 0; k < 4; ++k) out.q[k] = {q[k].real(), q[k].imag()};
  return out;
}

biquat::Axis axis_from_index(int i) {
  switch (i) {
    case 0: return biquat::Axis::X;
    case 1: return biquat::Axis::Y;
    case 2: return biquat::Axis::Z;
    default: throw biquat::UsageError("spin axis must be 0, 1 or 2");
  }
}

}  // namespace

extern "C" {

const char* bq_version(void) { return "1.0.0"; }
const char* bq_last_error(void) { return g_last_error.c_str(); }
double bq_fine_structure(void) { return biquat::kFineStructure; }
double bq_electron_rest_energy_ev(void) { return biquat::kElectronRestEnergyEv; }

bq_status bq_energy(int n, int kappa, double Z, double* energy, double* binding, double* s, double* C) {
  return guarded([&] {
    const double b = biquat::binding_energy(n, kappa, Z);
    put(energy, 1.0 + b);
    put(binding, b);
    const double za = Z * biquat::kFineStructure;
    put(s, std::sqrt(static_cast<double>(kappa) * kappa - za * za));
    put(C, std::sqrt(-b * (2.0 + b)));
  });
}

bq_status bq_shoot_energy(int n, int kappa, double Z, double* binding, int* iterations) {
  return guarded([&] {
    const auto r = biquat::shoot_eigenvalue(n, kappa, Z, biquat::nonrelativistic_bracket(n, Z));
    put(binding, r.binding);
    put(iterations, r.iterations);
  });
}

bq_status bq_wavefunction_create(int n, int kappa, int twice_mj, double Z, bq_wavefunction** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto w = std::make_unique<bq_wavefunction>(bq_wavefunction{biquat::assemble_wavefunction({n, kappa, twice_mj, Z})});
    *out = w.release();
  });
}

void bq_wavefunction_destroy(bq_wavefunction* w) { delete w; }

bq_status bq_wavefunction_normalization(const bq_wavefunction* w, double* out) {
  return guarded([&] {
    require(w, "wavefunction");
    require(out, "out");
    *out = w->value.normalization();
  });
}

bq_status bq_wavefunction_outer_radius(const bq_wavefunction* w, double* out) {
  return guarded([&] {
    require(w, "wavefunction");
    require(out, "out");
    *out = w->value.outer_radius();
  });
}

bq_status bq_wavefunction_value(const bq_wavefunction* w, double r, double theta, double phi, bq_quat* out) {
  return guarded([&] {
    require(w, "wavefunction");
    require(out, "out");
    if (!(r > 0.0)) throw biquat::DomainError("radius must be positive");
    *out = to_c(w->value.value(r, theta, phi));
  });
}

bq_status bq_wavefunction_density(const bq_wavefunction* w, double r, double theta, double phi, double* out) {
  return guarded([&] {
    require(w, "wavefunction");
    require(out, "out");
    if (!(r > 0.0)) throw biquat::DomainError("radius must be positive");
    *out = biquat::probability_density(w->value, r, theta, phi);
  });
}

bq_status bq_wavefunction_radial(const bq_wavefunction* w, double r, double* F, double* G) {
  return guarded([&] {
    require(w, "wavefunction");
    if (!(r >= 0.0)) throw biquat::DomainError("radius must be nonnegative");
    put(F, w->value.radial().F_at(r));
    put(G, w->value.radial().G_at(r));
  });
}

bq_status bq_wavefunction_probability(const bq_wavefunction* w, double r_lo, double r_hi, int theta_nodes,
                                      int phi_nodes, double* value, double* error_estimate) {
  return guarded([&] {
    require(w, "wavefunction");
    if (theta_nodes < 0 || phi_nodes < 0) throw biquat::UsageError("grid counts must be nonnegative");
    biquat::SphereGrid grid;
    if (theta_nodes > 0) grid.theta_nodes = static_cast<std::size_t>(theta_nodes);
    if (phi_nodes > 0) grid.phi_nodes = static_cast<std::size_t>(phi_nodes);
    const auto p = biquat::probability_in_region(w->value, r_lo, r_hi, grid);
    put(value, p.value);
    put(error_estimate, p.error_estimate);
  });
}

bq_status bq_spinor_evaluate(int l, int twice_j, int twice_mj, double theta, double phi, bq_quat* value,
                             double* p_up, double* p_down) {
  return guarded([&] {
    const biquat::SpinorFunction s(l, twice_j, twice_mj);
    put(value, to_c(biquat::spinor_as_biquaternion(s, theta, phi)));
    put(p_up, biquat::measure_probability(biquat::SpinProjection::Up, s, theta, phi));
    put(p_down, biquat::measure_probability(biquat::SpinProjection::Down, s, theta, phi));
  });
}

bq_status bq_rotate(const double axis[3], double angle, int spin_axis, bq_quat* rotation, bq_quat* rotated) {
  return guarded([&] {
    require(axis, "axis");
    const auto d = biquat::rotation({axis[0], axis[1], axis[2]}, angle);
    const auto s = biquat::spin_operator(axis_from_index(spin_axis));
    put(rotation, to_c(d.value()));
    put(rotated, to_c(biquat::rotate_operator(d, s)));
  });
}

bq_status bq_verify(const char* suite, uint64_t seed, bq_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    auto r = std::make_unique<bq_report>(bq_report{biquat::run_suite(suite, seed)});
    *out = r.release();
  });
}

size_t bq_report_size(const bq_report* r) { return r == nullptr ? 0 : r->value.checks.size(); }

bq_status bq_report_check(const bq_report* r, size_t index, const char** suite, const char** name,
                          double* max_deviation, double* tolerance, int* passed) {
  return guarded([&] {
    require(r, "report");
    if (index >= r->value.checks.size()) throw biquat::UsageError("check index out of range");
    const auto& c = r->value.checks[index];
    put(suite, c.suite.c_str());
    put(name, c.name.c_str());
    put(max_deviation, c.max_deviation);
    put(tolerance, c.tolerance);
    put(passed, c.passed ? 1 : 0);
  });
}

int bq_report_passed(const bq_report* r) { return r != nullptr && r->value.passed() ? 1 : 0; }

void bq_report_destroy(bq_report* r) { delete r; }

}  // extern "C"
