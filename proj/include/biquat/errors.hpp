// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace biquat {

/// Input outside the mathematical domain of an operation (no inverse,
/// imaginary s, |m| > l, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numerical procedure failed to converge or its preconditions on the
/// data (e.g. a bracketing sign change) were not met.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller asked for something that does not exist (unknown identity or
/// suite name, malformed option).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace biquat
