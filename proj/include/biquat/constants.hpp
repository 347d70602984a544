// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <numbers>

namespace biquat {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Coefficientwise tolerance for algebraic identities on O(1) inputs.
inline constexpr double kAlgebraTol = 1e-12;

/// Fine-structure constant (CODATA 2018).
inline constexpr double kFineStructure = 7.2973525693e-3;

/// Electron rest energy in eV (CODATA 2018).
inline constexpr double kElectronRestEnergyEv = 510998.95;

inline constexpr double kPi = std::numbers::pi;

}  // namespace biquat
