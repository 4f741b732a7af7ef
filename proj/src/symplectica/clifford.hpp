// Copyright 2026 The Symplectica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SYMPLECTICA_CLIFFORD_HPP
#define SYMPLECTICA_CLIFFORD_HPP

#include <array>

#include "symplectica/matrix.hpp"

namespace symplectica {

/// Real Pauli matrices eta0 (skew, squares to -1), eta1, eta2 (symmetric,
/// square to +1) and eta3 = identity. eta2 = eta0 * eta1.
struct PauliBasis {
  std::array<Matrix2, 4> eta;
};

const PauliBasis& pauli_basis();

/// Coefficients (h0, h1, h2, h3) of a 2x2 matrix in the eta basis.
std::array<double, 4> decompose2(const Matrix2& m);

/// The sixteen real Dirac matrices representing Cl(3,1).
///
///   gamma[0]       symplectic unit matrix (diag(eta0, eta0))
///   gamma[1..3]    symmetric basis vectors
///   gamma[4..6]    gamma0 * gamma[1..3]
///   gamma[7..9]    gamma2 gamma3, gamma3 gamma1, gamma1 gamma2
///   gamma[10..13]  gamma14 * gamma[0..3]
///   gamma[14]      gamma0 gamma1 gamma2 gamma3
///   gamma[15]      identity
///
/// gamma[0..9] are Hamiltonian, gamma[10..15] skew-Hamiltonian.
struct DiracBasis {
  std::array<Matrix4, 16> gamma;
  std::array<int, 16> signature;   // sign of gamma_k^2
  std::array<bool, 16> symmetric;  // false means skew-symmetric
  std::array<bool, 16> hamiltonian;
};

DiracBasis build_dirac_basis();

/// Process-wide immutable basis, built on first use.
const DiracBasis& dirac_basis();

/// Standard Kronecker product of two rectangular matrices.
Matrix kronecker(const Matrix& a, const Matrix& b);

struct DiracCoefficients {
  std::array<double, 16> m{};

  Matrix4 reconstruct(const DiracBasis& basis = dirac_basis()) const;
};

/// m_k = Tr(gamma_k^T M) / 4.
DiracCoefficients decompose4(const Matrix4& m, const DiracBasis& basis = dirac_basis());

/// The ten Hamiltonian coefficients grouped by their transformation
/// behaviour: energy = h0, p = (h1,h2,h3), e = (h4,h5,h6), b = (h7,h8,h9).
struct EMForm {
  double energy = 0.0;
  Vector3 p = Vector3::Zero();
  Vector3 e = Vector3::Zero();
  Vector3 b = Vector3::Zero();

  Matrix4 assemble() const;
  static EMForm from_coefficients(const DiracCoefficients& c);
};

/// Throws NotHamiltonian when any skew-Hamiltonian coefficient of `h`
/// exceeds `tolerance`.
EMForm em_form(const Matrix4& h, double tolerance = kStructureTolerance);

}  // namespace symplectica

#endif  // SYMPLECTICA_CLIFFORD_HPP
