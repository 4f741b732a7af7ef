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

#ifndef SYMPLECTICA_JACOBI_HPP
#define SYMPLECTICA_JACOBI_HPP

#include <utility>
#include <vector>

#include "symplectica/decouple4.hpp"

namespace symplectica {

struct JacobiConfig {
  /// Converged when |off-block part|_F / |H|_F drops below this.
  double tolerance = 1e-12;
  /// Block-step limit; 0 selects the default 64 n^2.
  long max_sweeps = 0;
  Strategy strategy = Strategy::kBivectorBoost;
};

struct JacobiReport {
  SymplecticTransform transform;
  Matrix result;  // 2x2 block-diagonal
  Structure structure = Structure::kHamiltonian;
  long steps = 0;
  /// Relative off-block residual before the first step and after every step.
  std::vector<double> residual_history;
  /// Candidate pairs passed over because their 4x4 sub-problem had no real
  /// decoupling.
  long skipped_pairs = 0;

  double residual() const { return residual_history.empty() ? 0.0 : residual_history.back(); }
};

/// |off-block part|_F / |H|_F, or 0 for the zero matrix.
double relative_off_block_residual(const Matrix& h);

/// Canonical-pair indices (i, k), i < k, whose coupling blocks H[i,k] and
/// H[k,i] carry the largest sum of squares. Ties go to the lexicographically
/// smallest pair. Throws DimensionTooSmall for fewer than two pairs.
std::pair<Eigen::Index, Eigen::Index> select_dominant_block(const Matrix& h);

/// Block-diagonalizes a Hamiltonian or skew-Hamiltonian matrix by successive
/// 4x4 symplectic decouplings of the dominant pair.
///
/// Throws NotHamiltonian for unstructured input, ComplexEigenvalues when no
/// coupled pair can be decoupled, NoConvergence when the step limit is hit or
/// the residual stops decreasing.
JacobiReport jacobi_decouple(const Matrix& h, const JacobiConfig& config = {});

}  // namespace symplectica

#endif  // SYMPLECTICA_JACOBI_HPP
