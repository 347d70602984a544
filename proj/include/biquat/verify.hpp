// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file verify.hpp
 * @brief Invariant suites over every module, with deterministic reports.
 *
 * Suites: algebra, spin, rotation, spinor, hydrogen, dirac, all. Randomized
 * checks draw from a std::mt19937_64 seeded per check from the suite seed, so
 * a report depends only on (suite, seed).
 */

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace biquat {

struct CheckResult {
  std::string suite;
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed;
  std::vector<CheckResult> checks;

  bool passed() const;
};

const std::vector<std::string>& suite_names();

/// Throws UsageError for an unknown suite name.
SuiteReport run_suite(std::string_view suite, std::uint64_t seed = 1);

}  // namespace biquat
