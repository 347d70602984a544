/* Copyright 2026 The biquat Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the biquat library.
 *
 * Every fallible call returns a bq_status. On failure the message is
 * available from bq_last_error() on the same thread until the next call
 * that fails. Objects are opaque handles released with their _destroy
 * function; passing NULL to a _destroy function is allowed.
 *
 * Units: energies in mc^2, radii in Bohr, angles in radians. Half-integer
 * quantum numbers are passed doubled (twice_j, twice_mj).
 */
#ifndef BIQUAT_BIQUAT_H
#define BIQUAT_BIQUAT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BIQUAT_BUILDING_LIBRARY)
#    define BIQUAT_API __declspec(dllexport)
#  else
#    define BIQUAT_API __declspec(dllimport)
#  endif
#else
#  define BIQUAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bq_status {
  BQ_OK = 0,
  BQ_ERR_USAGE = 1,     /* bad argument, unknown name, null pointer */
  BQ_ERR_DOMAIN = 2,    /* outside the mathematical domain */
  BQ_ERR_NUMERICAL = 3, /* a numerical procedure failed */
  BQ_ERR_INTERNAL = 4
} bq_status;

typedef struct bq_complex {
  double re;
  double im;
} bq_complex;

/* q[k] is the coefficient of e_k. */
typedef struct bq_quat {
  bq_complex q[4];
} bq_quat;

typedef struct bq_wavefunction bq_wavefunction;
typedef struct bq_report bq_report;

BIQUAT_API const char* bq_version(void);
BIQUAT_API const char* bq_last_error(void);
BIQUAT_API double bq_fine_structure(void);
BIQUAT_API double bq_electron_rest_energy_ev(void);

/* Sommerfeld energy of (n, kappa) at nuclear charge Z. Any output pointer
 * may be NULL. */
BIQUAT_API bq_status bq_energy(int n, int kappa, double Z, double* energy, double* binding, double* s,
                               double* C);

/* Eigenvalue from the shooting solver on the nonrelativistic bracket. */
BIQUAT_API bq_status bq_shoot_energy(int n, int kappa, double Z, double* binding, int* iterations);

BIQUAT_API bq_status bq_wavefunction_create(int n, int kappa, int twice_mj, double Z, bq_wavefunction** out);
BIQUAT_API void bq_wavefunction_destroy(bq_wavefunction* w);
BIQUAT_API bq_status bq_wavefunction_normalization(const bq_wavefunction* w, double* out);
BIQUAT_API bq_status bq_wavefunction_outer_radius(const bq_wavefunction* w, double* out);
BIQUAT_API bq_status bq_wavefunction_value(const bq_wavefunction* w, double r, double theta, double phi,
                                           bq_quat* out);
/* Sc(psi-bar* psi) per Bohr^3. */
BIQUAT_API bq_status bq_wavefunction_density(const bq_wavefunction* w, double r, double theta, double phi,
                                             double* out);
/* Unnormalized closed-form F and G at radius r. */
BIQUAT_API bq_status bq_wavefunction_radial(const bq_wavefunction* w, double r, double* F, double* G);
/* Probability of r in [r_lo, r_hi]; r_hi may be INFINITY. Grid counts of 0
 * select the defaults. */
BIQUAT_API bq_status bq_wavefunction_probability(const bq_wavefunction* w, double r_lo, double r_hi,
                                                 int theta_nodes, int phi_nodes, double* value,
                                                 double* error_estimate);

/* Spin spherical harmonic y_l^{j m_j}(theta, phi) as a biquaternion, with
 * the spin-up and spin-down probabilities. Output pointers may be NULL. */
BIQUAT_API bq_status bq_spinor_evaluate(int l, int twice_j, int twice_mj, double theta, double phi,
                                        bq_quat* value, double* p_up, double* p_down);

/* Rotation D(axis, angle) and D^dagger S_spin D for spin_axis 0, 1, 2
 * (x, y, z). axis must be a unit vector. Output pointers may be NULL. */
BIQUAT_API bq_status bq_rotate(const double axis[3], double angle, int spin_axis, bq_quat* rotation,
                               bq_quat* rotated);

/* Runs a verification suite: algebra, spin, rotation, spinor, hydrogen,
 * dirac or all. */
BIQUAT_API bq_status bq_verify(const char* suite, uint64_t seed, bq_report** out);
BIQUAT_API size_t bq_report_size(const bq_report* r);
/* Strings stay valid until the report is destroyed. */
BIQUAT_API bq_status bq_report_check(const bq_report* r, size_t index, const char** suite, const char** name,
                                     double* max_deviation, double* tolerance, int* passed);
BIQUAT_API int bq_report_passed(const bq_report* r);
BIQUAT_API void bq_report_destroy(bq_report* r);

#ifdef __cplusplus
}
#endif

#endif /* BIQUAT_BIQUAT_H */
