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

#ifndef SYMPLECTICA_BEAMS_HPP
#define SYMPLECTICA_BEAMS_HPP

#include <cstdint>
#include <vector>

#include "symplectica/jacobi.hpp"

namespace symplectica {

/// Second moments of a beam. sigma is the symmetric covariance matrix and
/// s = sigma * J^T the associated Hamiltonian moment matrix; sigma = s * J.
struct MomentMatrix {
  Matrix sigma;
  Matrix s;

  /// Throws InvalidArgument unless sigma is symmetric positive semi-definite.
  static MomentMatrix from_sigma(const Matrix& sigma);
  /// Throws NotHamiltonian unless s is Hamiltonian.
  static MomentMatrix from_s(const Matrix& s);
};

/// sigma -> M sigma M^T, s -> M s M^{-1}. Throws DimensionMismatch.
MomentMatrix moment_update(const MomentMatrix& m, const SymplecticTransform& t);
MomentMatrix moment_update(const MomentMatrix& m, const Matrix& transfer);

/// Tr(s^k), preserved by moment_update.
double moment_trace(const MomentMatrix& m, int k);

struct MatchedBeam {
  MomentMatrix moments;
  /// Maps lab coordinates to normal coordinates: x_normal = forward * x.
  SymplecticTransform normalizing;
  /// Per pair of the normal coordinates: emittance assigned and the
  /// rotation angle of the one-turn map in that pair, in [0, pi].
  std::vector<double> emittances;
  std::vector<double> phase_advances;
};

/// Matched second moments of the one-turn map M for the given emittances.
/// Normal-coordinate pairs are ordered by descending phase advance and the
/// emittances are assigned in that order. Throws NotSymplectic,
/// InvalidArgument (wrong count or non-positive emittance), UnstableLattice
/// (hyperbolic or parabolic pair), ComplexEigenvalues, NoConvergence.
MatchedBeam matched_sigma(const Matrix& transfer, const std::vector<double>& emittances,
                          const JacobiConfig& config = {});

/// count x 2n points drawn from the matched Gaussian distribution. Normal
/// deviates come from std::mt19937_64 through the Box-Muller transform, so
/// the output is a pure function of (beam, count, seed).
Matrix sample_matched(const MatchedBeam& beam, Eigen::Index count, std::uint64_t seed);
Matrix sample_matched(const Matrix& transfer, const std::vector<double>& emittances,
                      Eigen::Index count, std::uint64_t seed);

}  // namespace symplectica

#endif  // SYMPLECTICA_BEAMS_HPP
