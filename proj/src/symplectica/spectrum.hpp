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

#ifndef SYMPLECTICA_SPECTRUM_HPP
#define SYMPLECTICA_SPECTRUM_HPP

#include <complex>
#include <vector>

#include "symplectica/jacobi.hpp"

namespace symplectica {

enum class EigenClass {
  kElliptic,        // +-i omega
  kHyperbolic,      // +-omega
  kDegenerateZero,  // double zero
};

const char* eigen_class_name(EigenClass c);

/// One eigenvalue pair +-(re + i im). re, im >= 0 and exactly one of them
/// is nonzero unless the pair is degenerate. omega is |re + i im|.
struct EigenPair {
  double re = 0.0;
  double im = 0.0;
  EigenClass cls = EigenClass::kDegenerateZero;
  double omega = 0.0;
};

struct Spectrum {
  std::vector<EigenPair> pairs;

  /// Descending omega, ties broken by class (elliptic first).
  void sort();
  /// All 2n eigenvalues, each pair as +lambda followed by -lambda.
  std::vector<std::complex<double>> eigenvalues() const;
};

/// Pair from a (possibly noisy) squared eigenvalue lambda^2. |lambda^2| at or
/// below `zero` is reported as degenerate.
EigenPair pair_from_square(double lambda_sq, double zero);

/// Eigenvalues of a trace-free 2x2 Hamiltonian block from its eta
/// coefficients: lambda = +-sqrt(-h0^2 + h1^2 + h2^2).
Spectrum eigen2(const Matrix2& h);

struct NormalForm2 {
  /// Elliptic: transformed block is omega * eta0 (omega < 0 only for blocks
  /// with negative orientation, h0 < 0). Hyperbolic extension: omega * eta1.
  double omega = 0.0;
  EigenClass cls = EigenClass::kElliptic;
  SymplecticTransform transform;  // 2x2
  Matrix2 result = Matrix2::Zero();
  /// True for the hyperbolic boost normal form, which has no counterpart in
  /// the oscillator normal form.
  bool extension = false;
};

/// Oscillator normal form of an elliptic 2x2 block: a rotation about eta0
/// zeroes h2, then a boost along eta2 removes h1. Throws HyperbolicBlock when
/// h0^2 <= h1^2 + h2^2.
NormalForm2 normal_form2(const Matrix2& h);

/// Boost normal form lambda * eta1 (lambda > 0) of a hyperbolic 2x2 block.
/// Throws HyperbolicBlock unless h1^2 + h2^2 > h0^2.
NormalForm2 hyperbolic_normal_form2(const Matrix2& h);

struct Invariants4 {
  double k1 = 0.0;  // Tr(H^2) / 4
  double k2 = 0.0;  // Tr(H^4) / 16 - k1^2 / 4
};

Invariants4 k_invariants(const Matrix4& h);

/// Closed-form spectrum of a 4x4 Hamiltonian matrix:
/// lambda^2 = K1 + 2 sqrt(K2), Lambda^2 = K1 - 2 sqrt(K2).
/// Throws ComplexEigenvalues when K2 < 0 beyond round-off, NotHamiltonian
/// for unstructured input.
Spectrum eigen4(const Matrix4& h);

/// Final, non-symplectic diagonalization of omega * eta0:
/// V (omega eta0) V^{-1} = diag(i omega, -i omega), V = [[i, 1], [-i, 1]] / sqrt(2).
struct ComplexDiagonalization {
  std::complex<double> lambda_plus;
  std::complex<double> lambda_minus;
  Eigen::Matrix2cd change_of_basis;
  Eigen::Matrix2cd inverse;
  Eigen::Matrix2cd diagonal;
  bool symplectic = false;
};

/// Throws HyperbolicBlock for a non-elliptic normal form.
ComplexDiagonalization complex_diag2(const NormalForm2& nf);

/// Spectrum of the 2x2 diagonal blocks of a block-diagonal matrix.
Spectrum block_spectrum(const Matrix& block_diagonal);

/// Spectrum of a 2n x 2n Hamiltonian matrix via block-diagonalization.
Spectrum eigenvalues(const Matrix& h, const JacobiConfig& config = {});

/// Block-diagonalization followed by per-block normal forms. Zero blocks
/// keep the identity; nilpotent blocks are left as they are and reported
/// degenerate.
struct NormalForm {
  SymplecticTransform transform;
  Matrix result;
  std::vector<NormalForm2> blocks;
  JacobiReport decoupling;
};

NormalForm normal_form(const Matrix& h, const JacobiConfig& config = {});

/// exp of a trace-free 2x2 block in closed form.
Matrix2 block_exp(const Matrix2& b);

/// Principal logarithm of a 2x2 symplectic block. Elliptic angles lie in
/// (-pi, pi]. Throws LogBranch at angle pi and for blocks with negative
/// trace and real eigenvalues (no real logarithm).
Matrix2 block_log(const Matrix2& m);

/// exp(H) for Hamiltonian H via block-diagonalization; symplectic result.
Matrix sympl_exp(const Matrix& h, const JacobiConfig& config = {});

/// Hamiltonian logarithm of a symplectic matrix. The Hamiltonian part of M
/// is block-diagonalized, which decouples M as well; each block is inverted
/// in closed form.
Matrix sympl_log(const Matrix& m, const JacobiConfig& config = {});

}  // namespace symplectica

#endif  // SYMPLECTICA_SPECTRUM_HPP
