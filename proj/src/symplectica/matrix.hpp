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

#ifndef SYMPLECTICA_MATRIX_HPP
#define SYMPLECTICA_MATRIX_HPP

#include <Eigen/Dense>

#include <array>

namespace symplectica {

/// Dense real matrix used for every phase-space quantity. Phase-space
/// matrices are square with even dimension 2n; rows and columns are ordered
/// in canonical pairs (q1, p1, q2, p2, ...).
using Matrix = Eigen::MatrixXd;
using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;
using Vector3 = Eigen::Vector3d;

/// Absolute threshold for structural "is zero" checks.
inline constexpr double kStructureTolerance = 1e-12;

/// Throws DimensionOdd unless `m` is square with even, positive dimension.
void require_phase_matrix(const Matrix& m, const char* what);

/// Throws DimensionMismatch unless `a` and `b` have identical shape.
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

/// Number of canonical pairs (dim / 2).
inline Eigen::Index pair_count(const Matrix& m) { return m.rows() / 2; }

/// Symplectic unit matrix for n canonical pairs: diag(eta0, ..., eta0).
Matrix symplectic_unit(Eigen::Index pairs);

double max_abs(const Matrix& m);

/// Frobenius norm of all off-diagonal 2x2 blocks.
double off_block_norm(const Matrix& m);

/// Largest |entry| over all off-diagonal 2x2 blocks.
double off_block_max(const Matrix& m);

/// Row/column indices (2i, 2i+1, 2k, 2k+1) of canonical pairs i and k.
std::array<Eigen::Index, 4> pair_indices(Eigen::Index i, Eigen::Index k);

/// 4x4 principal sub-matrix on pairs i and k.
Matrix4 extract_pairs(const Matrix& m, Eigen::Index i, Eigen::Index k);

/// Identity of dimension `dim` with `block` placed on pairs i and k.
Matrix embed_pairs(const Matrix4& block, Eigen::Index dim, Eigen::Index i, Eigen::Index k);

/// In place: m <- E m where E is the identity except for `block` on pairs i, k.
void apply_left(Matrix& m, const Matrix4& block, Eigen::Index i, Eigen::Index k);

/// In place: m <- m E where E is the identity except for `block` on pairs i, k.
void apply_right(Matrix& m, const Matrix4& block, Eigen::Index i, Eigen::Index k);

}  // namespace symplectica

#endif  // SYMPLECTICA_MATRIX_HPP
