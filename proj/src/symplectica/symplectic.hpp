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

#ifndef SYMPLECTICA_SYMPLECTIC_HPP
#define SYMPLECTICA_SYMPLECTIC_HPP

#include "symplectica/clifford.hpp"
#include "symplectica/matrix.hpp"

namespace symplectica {

enum class GeneratorKind {
  kRotation,  // gamma_k^2 = -1, trigonometric exponential
  kBoost,     // gamma_k^2 = +1, hyperbolic exponential
};

/// One of the ten Hamiltonian Dirac matrices gamma_0 .. gamma_9 used as a
/// generator of elementary symplectic transformations.
class GeneratorId {
 public:
  /// Throws BadGenerator unless 0 <= index <= 9.
  explicit GeneratorId(int index);

  int index() const { return index_; }
  GeneratorKind kind() const;

 private:
  int index_;
};

/// Boosts with |tau| above this are rejected with HyperbolicOverflow.
inline constexpr double kMaxBoostArgument = 50.0;

/// A symplectic matrix together with its inverse. The inverse is always
/// assembled from exact generator inverses, never by numerical inversion.
struct SymplecticTransform {
  Matrix forward;
  Matrix inverse;

  static SymplecticTransform identity(Eigen::Index dim);

  /// The transform that applies *this first and then `next`.
  SymplecticTransform followed_by(const SymplecticTransform& next) const;
};

double hamiltonian_residual(const Matrix& h);       // max |H^T - J H J|
double skew_hamiltonian_residual(const Matrix& c);  // max |C^T + J C J|
double symplectic_residual(const Matrix& m);        // max |M J M^T - J|

/// H^T = J H J within tolerance. Throws DimensionOdd for odd or non-square input.
bool is_hamiltonian(const Matrix& h, double tolerance = kStructureTolerance);
bool is_skew_hamiltonian(const Matrix& c, double tolerance = kStructureTolerance);
bool is_symplectic(const Matrix& m, double tolerance = kStructureTolerance);

/// -J M^T J. Throws NotSymplectic when `m` fails the symplectic predicate.
Matrix symplectic_inverse(const Matrix& m, double tolerance = kStructureTolerance);

/// exp(gamma_k tau / 2) in closed form, using `basis` for gamma_k.
Matrix4 generator_matrix(GeneratorId k, double tau, const DiracBasis& basis = dirac_basis());

/// 4x4 elementary transform R_k(tau) and its inverse R_k(-tau).
SymplecticTransform generator_exp(GeneratorId k, double tau);

/// R_k(tau) acting on canonical pairs i and j of a dim x dim phase space,
/// identity elsewhere. Throws BadEmbedding for i == j or out-of-range pairs.
SymplecticTransform generator_exp(GeneratorId k, double tau, Eigen::Index dim, Eigen::Index i,
                                  Eigen::Index j);

/// M H M^{-1}.
Matrix similarity(const SymplecticTransform& t, const Matrix& h);

/// (M + J M^T J) / 2, the Hamiltonian component of an arbitrary matrix.
Matrix hamiltonian_part(const Matrix& m);

}  // namespace symplectica

#endif  // SYMPLECTICA_SYMPLECTIC_HPP
