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

#include "symplectica/symplectic.hpp"

#include <cmath>
#include <string>

#include "symplectica/errors.hpp"

namespace symplectica {

GeneratorId::GeneratorId(int index) : index_(index) {
  if (index < 0 || index > 9) {
    throw Error(ErrorCode::kBadGenerator,
                "generator index " + std::to_string(index) + " is outside 0..9");
  }
}

GeneratorKind GeneratorId::kind() const {
  return dirac_basis().signature[index_] < 0 ? GeneratorKind::kRotation : GeneratorKind::kBoost;
}

SymplecticTransform SymplecticTransform::identity(Eigen::Index dim) {
  return {Matrix::Identity(dim, dim), Matrix::Identity(dim, dim)};
}

SymplecticTransform SymplecticTransform::followed_by(const SymplecticTransform& next) const {
  require_same_shape(forward, next.forward, "followed_by");
  return {next.forward * forward, inverse * next.inverse};
}

double hamiltonian_residual(const Matrix& h) {
  require_phase_matrix(h, "hamiltonian_residual");
  const Matrix j = symplectic_unit(pair_count(h));
  return max_abs(h.transpose() - j * h * j);
}

double skew_hamiltonian_residual(const Matrix& c) {
  require_phase_matrix(c, "skew_hamiltonian_residual");
  const Matrix j = symplectic_unit(pair_count(c));
  return max_abs(c.transpose() + j * c * j);
}

double symplectic_residual(const Matrix& m) {
  require_phase_matrix(m, "symplectic_residual");
  const Matrix j = symplectic_unit(pair_count(m));
  return max_abs(m * j * m.transpose() - j);
}

bool is_hamiltonian(const Matrix& h, double tolerance) {
  return hamiltonian_residual(h) <= tolerance;
}

bool is_skew_hamiltonian(const Matrix& c, double tolerance) {
  return skew_hamiltonian_residual(c) <= tolerance;
}

bool is_symplectic(const Matrix& m, double tolerance) {
  return symplectic_residual(m) <= tolerance;
}

Matrix symplectic_inverse(const Matrix& m, double tolerance) {
  if (!is_symplectic(m, tolerance)) {
    throw Error(ErrorCode::kNotSymplectic, "symplectic_inverse: residual " +
                                               std::to_string(symplectic_residual(m)) +
                                               " exceeds tolerance");
  }
  const Matrix j = symplectic_unit(pair_count(m));
  return -j * m.transpose() * j;
}

Matrix4 generator_matrix(GeneratorId k, double tau, const DiracBasis& basis) {
  if (!std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidArgument, "generator argument is not finite");
  }
  const double half = tau / 2.0;
  if (k.kind() == GeneratorKind::kRotation) {
    return std::cos(half) * Matrix4::Identity() + std::sin(half) * basis.gamma[k.index()];
  }
  if (std::abs(tau) > kMaxBoostArgument) {
    throw Error(ErrorCode::kHyperbolicOverflow,
                "boost argument " + std::to_string(tau) + " exceeds the cap of 50");
  }
  return std::cosh(half) * Matrix4::Identity() + std::sinh(half) * basis.gamma[k.index()];
}

SymplecticTransform generator_exp(GeneratorId k, double tau) {
  return {generator_matrix(k, tau), generator_matrix(k, -tau)};
}

SymplecticTransform generator_exp(GeneratorId k, double tau, Eigen::Index dim, Eigen::Index i,
                                  Eigen::Index j) {
  if (dim <= 0 || dim % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd, "generator_exp: dimension must be positive and even");
  }
  const Eigen::Index pairs = dim / 2;
  if (i == j || i < 0 || j < 0 || i >= pairs || j >= pairs) {
    throw Error(ErrorCode::kBadEmbedding, "generator_exp: bad pair embedding (" +
                                              std::to_string(i) + ", " + std::to_string(j) +
                                              ") for " + std::to_string(pairs) + " pairs");
  }
  return {embed_pairs(generator_matrix(k, tau), dim, i, j),
          embed_pairs(generator_matrix(k, -tau), dim, i, j)};
}

Matrix similarity(const SymplecticTransform& t, const Matrix& h) {
  require_same_shape(t.forward, h, "similarity");
  return t.forward * h * t.inverse;
}

Matrix hamiltonian_part(const Matrix& m) {
  require_phase_matrix(m, "hamiltonian_part");
  const Matrix j = symplectic_unit(pair_count(m));
  return 0.5 * (m + j * m.transpose() * j);
}

}  // namespace symplectica
