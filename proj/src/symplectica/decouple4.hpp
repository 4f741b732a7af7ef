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

#ifndef SYMPLECTICA_DECOUPLE4_HPP
#define SYMPLECTICA_DECOUPLE4_HPP

#include "symplectica/clifford.hpp"
#include "symplectica/symplectic.hpp"

namespace symplectica {

/// Which structure class a matrix belongs to; decides how the steering
/// invariants are extracted.
enum class Structure {
  kHamiltonian,
  kSkewHamiltonian,
};

/// Hamiltonian, skew-Hamiltonian, or NotHamiltonian. `tolerance` is scaled
/// by max(1, max|entry|).
Structure classify_structure(const Matrix& m, double tolerance = kStructureTolerance);

/// Auxiliary scalar products and vectors of a 4x4 Hamiltonian matrix:
///
///   eps_r = E.B   eps_g = B.P   eps_b = E.P
///   r = energy P + B x E
///   g = energy E + P x B
///   b = energy B + E x P
///
/// p_sq and e_sq (|P|^2, |E|^2) are carried along because the gamma_0 row of
/// the scalar-product transformation table needs them.
struct AuxInvariants {
  double eps_r = 0.0;
  double eps_g = 0.0;
  double eps_b = 0.0;
  Vector3 r = Vector3::Zero();
  Vector3 g = Vector3::Zero();
  Vector3 b = Vector3::Zero();
  double p_sq = 0.0;
  double e_sq = 0.0;
};

AuxInvariants aux_invariants(const EMForm& f);

/// Throws NotHamiltonian unless `h` is Hamiltonian.
AuxInvariants aux_invariants(const Matrix4& h);

/// The three quantities that steer the decoupling steps.
struct SteeringInvariants {
  double eps_r = 0.0;
  double eps_g = 0.0;
  Vector3 b = Vector3::Zero();
};

/// Extracted from H^2: eps_g = Tr(g10^T H^2)/8, eps_r = Tr(g14^T H^2)/8,
/// b = Tr(g11..13^T H^2)/8.
SteeringInvariants steering_from_square(const Matrix4& h);

/// For a skew-Hamiltonian C the matrix itself plays the role of H^2/2:
/// eps_g = c10, b = (c11, c12, c13), eps_r = c14.
SteeringInvariants steering_from_skew(const Matrix4& c);

struct ScalarProducts {
  double eps_r = 0.0;
  double eps_g = 0.0;
  double eps_b = 0.0;
};

/// Predicted scalar products after R_k(tau) H R_k(tau)^{-1} for k in 0..6.
/// Throws BadGenerator for k outside 0..6.
ScalarProducts transform_table_eps(int k, double tau, const AuxInvariants& aux);

enum class Strategy : int {
  /// R0 zeroes eps_r, spatial rotations align b with y, the gamma_5 boost
  /// zeroes eps_g.
  kBivectorBoost = 1,
  /// R0 zeroes eps_g, spatial rotations align b with y, the gamma_2 boost
  /// zeroes eps_r.
  kVectorBoost = 2,
};

struct Decouple4Options {
  Strategy strategy = Strategy::kBivectorBoost;
  /// Converged when the coupling residual is at most tolerance * |H|_F.
  double tolerance = 1e-12;
  int max_passes = 64;
};

struct DecoupleReport {
  SymplecticTransform transform;
  Matrix4 result;
  Strategy strategy = Strategy::kBivectorBoost;
  int passes = 0;
  /// Largest |entry| of the off-diagonal 2x2 coupling blocks of `result`.
  double residual = 0.0;
};

/// Block-diagonalizes a 4x4 Hamiltonian or skew-Hamiltonian matrix into two
/// 2x2 blocks by repeated passes of the four elementary steps.
///
/// Throws ComplexEigenvalues when the boost step is impossible, NoConvergence
/// when the residual stalls above tolerance or the pass limit is reached,
/// NotHamiltonian when `h` is in neither structure class.
DecoupleReport decouple4(const Matrix4& h, const Decouple4Options& options = {});
DecoupleReport decouple4(const Matrix4& h, Structure structure, const Decouple4Options& options);

namespace detail {

struct PassOutcome {
  DecoupleReport report;
  bool converged = false;
};

/// Runs passes until converged, stalled or out of passes, then tries a few
/// linearized corrections. Only throws for ComplexEigenvalues and
/// HyperbolicOverflow.
PassOutcome run_decouple_passes(const Matrix4& h, Structure structure, const Decouple4Options& options);

}  // namespace detail

}  // namespace symplectica

#endif  // SYMPLECTICA_DECOUPLE4_HPP
