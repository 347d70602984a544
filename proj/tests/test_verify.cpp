// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "biquat/errors.hpp"
#include "biquat/verify.hpp"

using namespace biquat;

TEST_CASE("every suite passes") {
  for (const auto& name : suite_names()) {
    if (name == "all") continue;
    const SuiteReport r = run_suite(name, 1);
    CHECK_FALSE(r.checks.empty());
    for (const auto& c : r.checks) {
      INFO(c.suite << ": " << c.name << " deviation " << c.max_deviation << " tolerance " << c.tolerance);
      CHECK(c.passed);
      CHECK(c.suite == name);
    }
  }
}

TEST_CASE("reports are deterministic and seed-dependent only through random checks") {
  const SuiteReport a = run_suite("algebra", 42);
  const SuiteReport b = run_suite("algebra", 42);
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    CHECK(a.checks[i].name == b.checks[i].name);
    CHECK(a.checks[i].max_deviation == b.checks[i].max_deviation);
  }
  const SuiteReport c = run_suite("algebra", 43);
  bool differs = false;
  for (std::size_t i = 0; i < a.checks.size(); ++i) differs |= a.checks[i].max_deviation != c.checks[i].max_deviation;
  CHECK(differs);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope"), UsageError); }
