// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "biquat/biquat.h"

TEST_CASE("energy and status codes") {
  double e = 0.0;
  double b = 0.0;
  double s = 0.0;
  double c = 0.0;
  REQUIRE(bq_energy(1, -1, 1.0, &e, &b, &s, &c) == BQ_OK);
  CHECK(b * bq_electron_rest_energy_ev() == doctest::Approx(-13.6059).epsilon(1e-4));
  CHECK(e == doctest::Approx(s).epsilon(1e-15));
  CHECK(c == doctest::Approx(std::sqrt(1.0 - e * e)).epsilon(1e-9));
  CHECK(bq_energy(1, -1, 1.0, nullptr, nullptr, nullptr, nullptr) == BQ_OK);

  CHECK(bq_energy(1, -1, 200.0, &e, &b, &s, &c) == BQ_ERR_DOMAIN);
  CHECK(std::string(bq_last_error()).find("s imaginary") != std::string::npos);
  CHECK(bq_energy(1, 0, 1.0, &e, nullptr, nullptr, nullptr) == BQ_ERR_DOMAIN);
}

TEST_CASE("shooting through the C interface") {
  double b = 0.0;
  int it = 0;
  REQUIRE(bq_shoot_energy(2, 1, 20.0, &b, &it) == BQ_OK);
  double ref = 0.0;
  REQUIRE(bq_energy(2, 1, 20.0, nullptr, &ref, nullptr, nullptr) == BQ_OK);
  CHECK(std::abs(b - ref) / std::abs(ref) < 1e-8);
  CHECK(it > 0);
}

TEST_CASE("wavefunction handle") {
  bq_wavefunction* w = nullptr;
  REQUIRE(bq_wavefunction_create(1, -1, 1, 1.0, &w) == BQ_OK);
  REQUIRE(w != nullptr);
  double a = 0.0;
  CHECK(bq_wavefunction_normalization(w, &a) == BQ_OK);
  CHECK(a > 0.0);
  double p = 0.0;
  double err = 1.0;
  CHECK(bq_wavefunction_probability(w, 0.0, INFINITY, 0, 0, &p, &err) == BQ_OK);
  CHECK(std::abs(p - 1.0) < 1e-6);
  CHECK(bq_wavefunction_probability(w, 0.0, 1.0, 16, 32, &p, &err) == BQ_OK);
  CHECK(p == doctest::Approx(0.3233).epsilon(1e-3));
  CHECK(bq_wavefunction_probability(w, 1.0, 0.5, 0, 0, &p, &err) == BQ_ERR_DOMAIN);
  CHECK(bq_wavefunction_probability(w, 0.0, 1.0, -1, 0, &p, &err) == BQ_ERR_USAGE);

  double d = 0.0;
  CHECK(bq_wavefunction_density(w, 1.0, 0.3, 0.2, &d) == BQ_OK);
  bq_quat q{};
  CHECK(bq_wavefunction_value(w, 1.0, 0.3, 0.2, &q) == BQ_OK);
  double n2 = 0.0;
  for (const auto& c : q.q) n2 += c.re * c.re + c.im * c.im;
  CHECK(d == doctest::Approx(n2).epsilon(1e-12));
  CHECK(bq_wavefunction_density(w, 0.0, 0.3, 0.2, &d) == BQ_ERR_DOMAIN);
  double F = 0.0;
  double G = 0.0;
  CHECK(bq_wavefunction_radial(w, 1.0, &F, &G) == BQ_OK);
  CHECK(G / F < 0.0);
  CHECK(bq_wavefunction_density(nullptr, 1.0, 0.3, 0.2, &d) == BQ_ERR_USAGE);
  bq_wavefunction_destroy(w);
  bq_wavefunction_destroy(nullptr);

  bq_wavefunction* bad = reinterpret_cast<bq_wavefunction*>(0x1);
  CHECK(bq_wavefunction_create(1, 1, 1, 1.0, &bad) == BQ_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(bq_wavefunction_create(1, -1, 3, 1.0, &bad) == BQ_ERR_DOMAIN);
  CHECK(bq_wavefunction_create(1, -1, 1, 1.0, nullptr) == BQ_ERR_USAGE);
}

TEST_CASE("spinor and rotation") {
  bq_quat v{};
  double up = 0.0;
  double down = 0.0;
  REQUIRE(bq_spinor_evaluate(2, 5, 3, 0.7, 0.1, &v, &up, &down) == BQ_OK);
  // Y_2^2 magnitude squared: (15 / 32 pi) sin^4 theta.
  const double y22 = 15.0 / (32.0 * M_PI) * std::pow(std::sin(0.7), 4);
  CHECK(down == doctest::Approx(0.2 * y22).epsilon(1e-12));
  CHECK(bq_spinor_evaluate(2, 7, 3, 0.7, 0.1, &v, &up, &down) == BQ_ERR_DOMAIN);

  const double axis[3] = {0.0, 1.0, 0.0};
  bq_quat d{};
  bq_quat r{};
  REQUIRE(bq_rotate(axis, M_PI / 2, 2, &d, &r) == BQ_OK);
  // Sz rotated about y by pi/2 is -Sx = (i/2) e3.
  CHECK(std::abs(r.q[3].im - 0.5) < 1e-15);
  CHECK(std::abs(r.q[0].re) + std::abs(r.q[1].im) + std::abs(r.q[2].im) < 1e-15);
  const double skew[3] = {1.0, 1.0, 0.0};
  CHECK(bq_rotate(skew, 1.0, 2, &d, &r) == BQ_ERR_DOMAIN);
  CHECK(bq_rotate(axis, 1.0, 3, &d, &r) == BQ_ERR_USAGE);
}

TEST_CASE("verification report") {
  bq_report* r = nullptr;
  REQUIRE(bq_verify("dirac", 1, &r) == BQ_OK);
  CHECK(bq_report_size(r) > 10);
  CHECK(bq_report_passed(r) == 1);
  const char* suite = nullptr;
  const char* name = nullptr;
  double dev = -1.0;
  double tol = -1.0;
  int passed = 0;
  CHECK(bq_report_check(r, 0, &suite, &name, &dev, &tol, &passed) == BQ_OK);
  CHECK(std::strcmp(suite, "dirac") == 0);
  CHECK(passed == 1);
  CHECK(bq_report_check(r, bq_report_size(r), &suite, &name, &dev, &tol, &passed) == BQ_ERR_USAGE);
  bq_report_destroy(r);
  r = nullptr;
  CHECK(bq_verify("bogus", 1, &r) == BQ_ERR_USAGE);
  CHECK(r == nullptr);
  CHECK(bq_report_size(nullptr) == 0);
}
