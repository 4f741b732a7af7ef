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

#include "symplectica/beams.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

#include "symplectica/errors.hpp"
#include "symplectica/spectrum.hpp"

namespace symplectica {
namespace {

constexpr double kMatchedTolerance = 1e-8;

double relative_frobenius(const Matrix& a, const Matrix& b) {
  const double scale = b.norm();
  return scale > 0.0 ? (a - b).norm() / scale : (a - b).norm();
}

}  // namespace

MomentMatrix MomentMatrix::from_sigma(const Matrix& sigma) {
  require_phase_matrix(sigma, "MomentMatrix");
  const double scale = std::max(1.0, max_abs(sigma));
  if (max_abs(sigma - sigma.transpose()) > kStructureTolerance * scale) {
    throw Error(ErrorCode::kInvalidArgument, "MomentMatrix: sigma is not symmetric");
  }
  const Matrix sym = (sigma + sigma.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kStructureTolerance * scale) {
    throw Error(ErrorCode::kInvalidArgument, "MomentMatrix: sigma is not positive semi-definite");
  }
  MomentMatrix m;
  m.sigma = sym;
  m.s = sym * symplectic_unit(pair_count(sym)).transpose();
  return m;
}

MomentMatrix MomentMatrix::from_s(const Matrix& s) {
  require_phase_matrix(s, "MomentMatrix");
  const double scale = std::max(1.0, max_abs(s));
  if (!is_hamiltonian(s, kStructureTolerance * scale)) {
    throw Error(ErrorCode::kNotHamiltonian, "MomentMatrix: s is not Hamiltonian");
  }
  MomentMatrix m;
  m.s = s;
  m.sigma = s * symplectic_unit(pair_count(s));
  return m;
}

MomentMatrix moment_update(const MomentMatrix& m, const SymplecticTransform& t) {
  require_same_shape(m.sigma, t.forward, "moment_update");
  require_same_shape(m.sigma, t.inverse, "moment_update");
  MomentMatrix out;
  out.sigma = t.forward * m.sigma * t.forward.transpose();
  out.s = t.forward * m.s * t.inverse;
  return out;
}

MomentMatrix moment_update(const MomentMatrix& m, const Matrix& transfer) {
  require_same_shape(m.sigma, transfer, "moment_update");
  const double scale = std::max(1.0, max_abs(transfer));
  return moment_update(m, SymplecticTransform{transfer,
                                              symplectic_inverse(transfer, kStructureTolerance * scale * scale)});
}

double moment_trace(const MomentMatrix& m, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "moment_trace: power must be positive");
  Matrix p = m.s;
  for (int i = 1; i < k; ++i) p = p * m.s;
  return p.trace();
}

MatchedBeam matched_sigma(const Matrix& transfer, const std::vector<double>& emittances,
                          const JacobiConfig& config) {
  require_phase_matrix(transfer, "matched_sigma");
  const Eigen::Index n = pair_count(transfer);
  const double scale = std::max(1.0, max_abs(transfer));
  if (symplectic_residual(transfer) > kStructureTolerance * scale * scale) {
    throw Error(ErrorCode::kNotSymplectic, "matched_sigma: transfer matrix is not symplectic");
  }
  if (static_cast<Eigen::Index>(emittances.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument, "matched_sigma: expected " + std::to_string(n) +
                                                 " emittances, got " + std::to_string(emittances.size()));
  }
  for (double e : emittances) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw Error(ErrorCode::kInvalidArgument, "matched_sigma: emittances must be positive and finite");
    }
  }

  SymplecticTransform t = SymplecticTransform::identity(transfer.rows());
  if (n > 1) t = jacobi_decouple(hamiltonian_part(transfer), config).transform;
  const Matrix decoupled = t.forward * transfer * t.inverse;
  if (relative_off_block_residual(decoupled) > kMatchedTolerance) {
    throw Error(ErrorCode::kNoConvergence, "matched_sigma: one-turn map did not decouple");
  }

  SymplecticTransform blocks = SymplecticTransform::identity(transfer.rows());
  std::vector<double> advance(n);
  for (Eigen::Index p = 0; p < n; ++p) {
    const Matrix2 b = decoupled.block<2, 2>(2 * p, 2 * p);
    const double c0 = b.trace() / 2.0;
    const Matrix2 h = hamiltonian_part(b);
    if (max_abs(h) <= kStructureTolerance * scale) {
      advance[p] = c0 > 0.0 ? 0.0 : std::numbers::pi;
      continue;
    }
    if (std::abs(c0) >= 1.0) {
      throw Error(ErrorCode::kUnstableLattice,
                  "matched_sigma: pair " + std::to_string(p) + " has |Tr/2| = " +
                      std::to_string(std::abs(c0)) + " >= 1, no bounded matched beam");
    }
    NormalForm2 nf;
    try {
      nf = normal_form2(h);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kHyperbolicBlock) {
        throw Error(ErrorCode::kUnstableLattice, std::string("matched_sigma: ") + e.what());
      }
      throw;
    }
    blocks.forward.block<2, 2>(2 * p, 2 * p) = nf.transform.forward;
    blocks.inverse.block<2, 2>(2 * p, 2 * p) = nf.transform.inverse;
    advance[p] = std::atan2(std::sqrt(std::max(0.0, 1.0 - c0 * c0)), c0);
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return advance[a] > advance[b]; });

  MatchedBeam beam;
  beam.normalizing = t.followed_by(blocks);
  beam.emittances.assign(n, 0.0);
  beam.phase_advances = advance;
  Matrix sigma_normal = Matrix::Zero(transfer.rows(), transfer.cols());
  for (Eigen::Index rank = 0; rank < n; ++rank) {
    const Eigen::Index p = order[rank];
    beam.emittances[p] = emittances[rank];
    sigma_normal.block<2, 2>(2 * p, 2 * p) = emittances[rank] * Matrix2::Identity();
  }
  const Matrix& inv = beam.normalizing.inverse;
  const Matrix sigma = inv * sigma_normal * inv.transpose();
  beam.moments = MomentMatrix::from_sigma((sigma + sigma.transpose()) / 2.0);

  const double mismatch =
      relative_frobenius(transfer * beam.moments.sigma * transfer.transpose(), beam.moments.sigma);
  if (mismatch > kMatchedTolerance) {
    throw Error(ErrorCode::kNoConvergence,
                "matched_sigma: result is not a fixed point (mismatch " + std::to_string(mismatch) + ")");
  }
  return beam;
}

Matrix sample_matched(const MatchedBeam& beam, Eigen::Index count, std::uint64_t seed) {
  if (count < 1) throw Error(ErrorCode::kInvalidArgument, "sample_matched: count must be at least 1");
  const Eigen::Index dim = beam.normalizing.forward.rows();
  std::mt19937_64 engine(seed);
  auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };

  Matrix xi(count, dim);
  bool have_spare = false;
  double spare = 0.0;
  for (Eigen::Index r = 0; r < count; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (have_spare) {
        xi(r, c) = spare;
        have_spare = false;
        continue;
      }
      const double u1 = 1.0 - uniform();  // (0, 1]
      const double u2 = uniform();
      const double radius = std::sqrt(-2.0 * std::log(u1));
      const double angle = 2.0 * std::numbers::pi * u2;
      xi(r, c) = radius * std::cos(angle);
      spare = radius * std::sin(angle);
      have_spare = true;
    }
  }
  Eigen::VectorXd widths(dim);
  for (Eigen::Index p = 0; p < dim / 2; ++p) {
    widths(2 * p) = widths(2 * p + 1) = std::sqrt(beam.emittances[p]);
  }
  return xi * widths.asDiagonal() * beam.normalizing.inverse.transpose();
}

Matrix sample_matched(const Matrix& transfer, const std::vector<double>& emittances,
                      Eigen::Index count, std::uint64_t seed) {
  return sample_matched(matched_sigma(transfer, emittances), count, seed);
}

}  // namespace symplectica
