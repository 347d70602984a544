// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file oracle.hpp
 * @brief Named identities evaluated twice: once with biquaternion arithmetic
 *        and once with 2x2 complex matrices.
 *
 * The matrix side only ever sees to_matrix_linear / ket_to_vector images of
 * the inputs and never calls the Hamilton product.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "biquat/biquaternion.hpp"

namespace biquat {

struct OracleReport {
  std::string identity;
  std::size_t samples;
  double max_deviation;
  double tolerance;
  bool passed() const { return max_deviation <= tolerance; }
};

/// Registered names: homomorphism, bijection, pauli-products, eigen-x,
/// eigen-y, eigen-z, outer-products, rotation-conjugation,
/// ket-compatibility, conjugating-subspace, norm-determinant.
const std::vector<std::string>& oracle_identities();

/// Throws UsageError for an unknown name. `samples` applies to the
/// randomized identities; the fixed-table ones report their table size.
OracleReport matrix_oracle_check(std::string_view identity, std::size_t samples = 1000,
                                 std::uint64_t seed = 1);

/// Coefficients uniform in [-1, 1] for both real and imaginary parts.
Biquaternion random_biquaternion(std::mt19937_64& rng);

}  // namespace biquat
