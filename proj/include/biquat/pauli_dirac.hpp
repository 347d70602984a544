// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file pauli_dirac.hpp
 * @brief The Pauli matrix algebra inside the biquaternions, and Dirac gamma
 *        matrices built from 2x2 biquaternion blocks.
 *
 * An element q0 I + q1 sz + q2 sy + q3 sx + q4 sy sx + q5 sx sz + q6 sz sy
 * + q7 sx sy sz (real q_k) embeds as
 *
 *   (q0 + i q7) e0 - (i q1 + q4) e1 - (i q2 + q5) e2 - (i q3 + q6) e3,
 *
 * the unique biquaternion with that matrix image under to_matrix_linear.
 *
 * Gamma matrices, indexed in listing order (identity block, then the sz,
 * sx and sy blocks):
 *
 *   g(0) = (e0, 0; 0, -e0)        g(1) = (0, -i e1; i e1, 0)
 *   g(2) = (0, -i e3; i e3, 0)    g(3) = (0, -i e2; i e2, 0)
 *
 * In the conventional Dirac basis g(0) = gamma^0, g(1) = gamma^3,
 * g(2) = gamma^1, g(3) = gamma^2.
 */

#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "biquat/biquaternion.hpp"
#include "biquat/matrix_bridge.hpp"

namespace biquat {

/// Real coefficients on {I, sz, sy, sx, sy sx, sx sz, sz sy, sx sy sz}.
struct PauliAlgebraElement {
  std::array<double, 8> q{};
};

/// Direct matrix sum of the basis expansion, without the Hamilton product.
ComplexMatrix2 matrix_sum(const PauliAlgebraElement& e);

enum class EmbedVariant {
  Derived,              ///< the isomorphism above
  SwappedPseudoscalar,  ///< (q0 - i q7) e0 ... - (i q3 + q7) e3; not an isomorphism
};

Biquaternion embed(const PauliAlgebraElement& e, EmbedVariant variant = EmbedVariant::Derived);

/// -i e0, the image of -iI.
Biquaternion hodge();

class ComplexMatrix4 {
 public:
  static ComplexMatrix4 identity();
  cplx operator()(int r, int c) const { return m_[static_cast<std::size_t>(4 * r + c)]; }
  cplx& operator()(int r, int c) { return m_[static_cast<std::size_t>(4 * r + c)]; }

  friend ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b);
  friend ComplexMatrix4 operator*(cplx s, const ComplexMatrix4& a);

 private:
  std::array<cplx, 16> m_{};
};

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b);
std::ostream& operator<<(std::ostream& os, const ComplexMatrix4& m);

/// 2x2 matrix of biquaternion blocks, row-major.
struct DiracMatrix {
  std::array<Biquaternion, 4> blocks{};

  const Biquaternion& block(int r, int c) const { return blocks[static_cast<std::size_t>(2 * r + c)]; }
  Biquaternion& block(int r, int c) { return blocks[static_cast<std::size_t>(2 * r + c)]; }
};

/// Block product using the Hamilton product inside each block.
DiracMatrix operator*(const DiracMatrix& a, const DiracMatrix& b);
DiracMatrix operator+(const DiracMatrix& a, const DiracMatrix& b);

/// Replaces each block by its to_matrix_linear image.
ComplexMatrix4 expand(const DiracMatrix& m);

enum class GammaVariant {
  Standard,        ///< g(0) = (e0, 0; 0, -e0)
  IdentityBlocks,  ///< g(0) = (e0, 0; 0, e0)
};

/// Throws DomainError unless index is 0..3.
DiracMatrix gamma(int index, GammaVariant variant = GammaVariant::Standard);

struct AnticommutatorEntry {
  int mu;
  int nu;
  double expected;   ///< 2 eta_{mu nu} under the listing-order metric
  double deviation;  ///< max entry of |{g_mu, g_nu} - expected I4|
};

struct CliffordReport {
  std::vector<AnticommutatorEntry> entries;  ///< all 10 pairs mu <= nu
  double tolerance;

  double max_deviation() const;
  /// Pairs whose deviation exceeds the tolerance.
  std::vector<AnticommutatorEntry> deviating() const;
  bool passed() const { return deviating().empty(); }
};

/// {g_mu, g_nu} - 2 eta_{mu nu} I4 with eta = diag(+, -, -, -), computed on
/// the 4x4 expansions.
CliffordReport verify_clifford(GammaVariant variant = GammaVariant::Standard, double tolerance = 1e-14);

}  // namespace biquat
