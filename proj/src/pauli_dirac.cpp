// Copyright 2026 The biquat Authors
// SPDX-License-Identifier: Apache-2.0

#include "biquat/pauli_dirac.hpp"

#include <algorithm>
#include <ostream>

#include "biquat/errors.hpp"

namespace biquat {

ComplexMatrix2 matrix_sum(const PauliAlgebraElement& e) {
  const ComplexMatrix2 I = ComplexMatrix2::identity();
  const ComplexMatrix2 sx = ComplexMatrix2::sigma_x();
  const ComplexMatrix2 sy = ComplexMatrix2::sigma_y();
  const ComplexMatrix2 sz = ComplexMatrix2::sigma_z();
  const std::array<ComplexMatrix2, 8> basis{I, sz, sy, sx, sy * sx, sx * sz, sz * sy, sx * sy * sz};
  ComplexMatrix2 out;
  for (std::size_t k = 0; k < 8; ++k) out = out + cplx{e.q[k]} * basis[k];
  return out;
}

Biquaternion embed(const PauliAlgebraElement& e, EmbedVariant variant) {
  const auto& q = e.q;
  if (variant == EmbedVariant::SwappedPseudoscalar) {
    return {cplx{q[0], -q[7]}, -cplx{q[4], q[1]}, -cplx{q[5], q[2]}, -cplx{q[7], q[3]}};
  }
  return {cplx{q[0], q[7]}, -cplx{q[4], q[1]}, -cplx{q[5], q[2]}, -cplx{q[6], q[3]}};
}

Biquaternion hodge() { return {-kI, 0.0, 0.0, 0.0}; }

ComplexMatrix4 ComplexMatrix4::identity() {
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix4 operator+(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = a.m_[i] + b.m_[i];
  return r;
}

ComplexMatrix4 operator-(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = a.m_[i] - b.m_[i];
  return r;
}

ComplexMatrix4 operator*(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  ComplexMatrix4 r;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  }
  return r;
}

ComplexMatrix4 operator*(cplx s, const ComplexMatrix4& a) {
  ComplexMatrix4 r;
  for (std::size_t i = 0; i < 16; ++i) r.m_[i] = s * a.m_[i];
  return r;
}

double max_abs_diff(const ComplexMatrix4& a, const ComplexMatrix4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const ComplexMatrix4& m) {
  for (int i = 0; i < 4; ++i) {
    os << (i == 0 ? "[[" : " [");
    for (int j = 0; j < 4; ++j) os << m(i, j) << (j == 3 ? "]" : ", ");
    os << (i == 3 ? "]" : "\n");
  }
  return os;
}

DiracMatrix operator*(const DiracMatrix& a, const DiracMatrix& b) {
  DiracMatrix r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) r.block(i, j) = a.block(i, 0) * b.block(0, j) + a.block(i, 1) * b.block(1, j);
  }
  return r;
}

DiracMatrix operator+(const DiracMatrix& a, const DiracMatrix& b) {
  DiracMatrix r;
  for (std::size_t k = 0; k < 4; ++k) r.blocks[k] = a.blocks[k] + b.blocks[k];
  return r;
}

ComplexMatrix4 expand(const DiracMatrix& m) {
  ComplexMatrix4 r;
  for (int bi = 0; bi < 2; ++bi) {
    for (int bj = 0; bj < 2; ++bj) {
      const ComplexMatrix2 blk = to_matrix_linear(m.block(bi, bj));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) r(2 * bi + i, 2 * bj + j) = blk(i, j);
      }
    }
  }
  return r;
}

DiracMatrix gamma(int index, GammaVariant variant) {
  const Biquaternion zero;
  const auto off_diagonal = [&](const Biquaternion& unit) {
    return DiracMatrix{{zero, -kI * unit, kI * unit, zero}};
  };
  switch (index) {
    case 0:
      return DiracMatrix{{e0, zero, zero, variant == GammaVariant::IdentityBlocks ? e0 : -e0}};
    case 1:
      return off_diagonal(e1);
    case 2:
      return off_diagonal(e3);
    case 3:
      return off_diagonal(e2);
    default:
      throw DomainError("gamma index must be 0..3");
  }
}

double CliffordReport::max_deviation() const {
  double m = 0.0;
  for (const auto& e : entries) m = std::max(m, e.deviation);
  return m;
}

std::vector<AnticommutatorEntry> CliffordReport::deviating() const {
  std::vector<AnticommutatorEntry> out;
  for (const auto& e : entries) {
    if (!(e.deviation <= tolerance)) out.push_back(e);
  }
  return out;
}

CliffordReport verify_clifford(GammaVariant variant, double tolerance) {
  std::array<ComplexMatrix4, 4> g;
  for (int mu = 0; mu < 4; ++mu) g[static_cast<std::size_t>(mu)] = expand(gamma(mu, variant));
  CliffordReport report{{}, tolerance};
  const ComplexMatrix4 id = ComplexMatrix4::identity();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const auto& a = g[static_cast<std::size_t>(mu)];
      const auto& b = g[static_cast<std::size_t>(nu)];
      const double expected = mu != nu ? 0.0 : (mu == 0 ? 2.0 : -2.0);
      const double dev = max_abs_diff(a * b + b * a, cplx{expected} * id);
      report.entries.push_back({mu, nu, expected, dev});
    }
  }
  return report;
}

}  // namespace biquat
