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

#include "symplectica/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "symplectica/errors.hpp"

namespace symplectica {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

int class_rank(EigenClass c) {
  switch (c) {
    case EigenClass::kElliptic: return 0;
    case EigenClass::kHyperbolic: return 1;
    case EigenClass::kDegenerateZero: return 2;
  }
  return 3;
}

// Trace-free part of a 2x2 block and its eta coefficients.
struct BlockCoefficients {
  double h0, h1, h2;
};

BlockCoefficients coefficients(const Matrix2& b) {
  const auto h = decompose2(b);
  return {h[0], h[1], h[2]};
}

// exp(generator * tau / 2) for a 2x2 generator squaring to sign * I.
Matrix2 half_exp2(const Matrix2& generator, int sign, double tau) {
  const double half = tau / 2.0;
  if (sign < 0) return std::cos(half) * Matrix2::Identity() + std::sin(half) * generator;
  if (std::abs(tau) > kMaxBoostArgument) {
    throw Error(ErrorCode::kHyperbolicOverflow, "normal form boost argument exceeds the cap of 50");
  }
  return std::cosh(half) * Matrix2::Identity() + std::sinh(half) * generator;
}

Matrix2 block(const Matrix& m, Eigen::Index p) { return m.block<2, 2>(2 * p, 2 * p); }

void require_hamiltonian(const Matrix& h, const char* what) {
  if (classify_structure(h) != Structure::kHamiltonian) {
    throw Error(ErrorCode::kNotHamiltonian, std::string(what) + ": input is not Hamiltonian");
  }
}

// Series for cosh(sqrt(q)) and sinh(sqrt(q))/sqrt(q), valid for either sign of q.
void even_odd_series(double q, double& even, double& odd) {
  even = 0.0;
  odd = 0.0;
  double term_even = 1.0;  // q^k / (2k)!
  double term_odd = 1.0;   // q^k / (2k+1)!
  for (int k = 0; k < 24; ++k) {
    even += term_even;
    odd += term_odd;
    term_even *= q / ((2.0 * k + 1) * (2.0 * k + 2));
    term_odd *= q / ((2.0 * k + 2) * (2.0 * k + 3));
  }
}

}  // namespace

const char* eigen_class_name(EigenClass c) {
  switch (c) {
    case EigenClass::kElliptic: return "elliptic";
    case EigenClass::kHyperbolic: return "hyperbolic";
    case EigenClass::kDegenerateZero: return "degenerate-zero";
  }
  return "unknown";
}

void Spectrum::sort() {
  std::stable_sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.omega != b.omega) return a.omega > b.omega;
    return class_rank(a.cls) < class_rank(b.cls);
  });
}

std::vector<std::complex<double>> Spectrum::eigenvalues() const {
  std::vector<std::complex<double>> out;
  out.reserve(2 * pairs.size());
  for (const EigenPair& p : pairs) {
    out.emplace_back(p.re, p.im);
    out.emplace_back(-p.re, -p.im);
  }
  return out;
}

EigenPair pair_from_square(double lambda_sq, double zero) {
  EigenPair p;
  if (lambda_sq > zero) {
    p.re = std::sqrt(lambda_sq);
    p.cls = EigenClass::kHyperbolic;
    p.omega = p.re;
  } else if (lambda_sq < -zero) {
    p.im = std::sqrt(-lambda_sq);
    p.cls = EigenClass::kElliptic;
    p.omega = p.im;
  }
  return p;
}

Spectrum eigen2(const Matrix2& h) {
  const BlockCoefficients c = coefficients(h);
  const double magnitude = c.h0 * c.h0 + c.h1 * c.h1 + c.h2 * c.h2;
  const double radicand = -c.h0 * c.h0 + c.h1 * c.h1 + c.h2 * c.h2;
  Spectrum s;
  s.pairs.push_back(pair_from_square(radicand, 64 * kEps * magnitude));
  return s;
}

NormalForm2 normal_form2(const Matrix2& h) {
  const BlockCoefficients c = coefficients(h);
  if (!(c.h0 * c.h0 > c.h1 * c.h1 + c.h2 * c.h2)) {
    throw Error(ErrorCode::kHyperbolicBlock,
                "normal_form2: block is not elliptic (h0^2 <= h1^2 + h2^2)");
  }
  const auto& eta = pauli_basis().eta;

  // Step 1: rotate h2 into h1. h1_rot keeps the sign of h1.
  double tau1 = 0.0;
  double h1_rot = c.h1;
  if (c.h2 != 0.0) {
    if (c.h1 == 0.0) {
      tau1 = -std::numbers::pi / 2 * (c.h2 > 0 ? 1.0 : -1.0);
      h1_rot = std::abs(c.h2);
    } else {
      const double ratio = c.h2 / c.h1;
      tau1 = -std::atan(ratio);
      h1_rot = c.h1 * std::sqrt(1.0 + ratio * ratio);
    }
  }
  // Step 2: boost along eta2 removes h1_rot.
  const double tau2 = 0.5 * std::log((c.h0 - h1_rot) / (c.h0 + h1_rot));

  const Matrix2 r1 = half_exp2(eta[0], -1, tau1);
  const Matrix2 r1_inv = half_exp2(eta[0], -1, -tau1);
  const Matrix2 r2 = half_exp2(eta[2], 1, tau2);
  const Matrix2 r2_inv = half_exp2(eta[2], 1, -tau2);

  NormalForm2 nf;
  nf.cls = EigenClass::kElliptic;
  nf.omega = std::copysign(std::sqrt(c.h0 * c.h0 - c.h1 * c.h1 - c.h2 * c.h2), c.h0);
  nf.transform.forward = r2 * r1;
  nf.transform.inverse = r1_inv * r2_inv;
  nf.result = nf.transform.forward * h * nf.transform.inverse;
  return nf;
}

NormalForm2 hyperbolic_normal_form2(const Matrix2& h) {
  const BlockCoefficients c = coefficients(h);
  const double rho_sq = c.h1 * c.h1 + c.h2 * c.h2;
  if (!(rho_sq > c.h0 * c.h0)) {
    throw Error(ErrorCode::kHyperbolicBlock,
                "hyperbolic_normal_form2: block is not hyperbolic (h1^2 + h2^2 <= h0^2)");
  }
  const auto& eta = pauli_basis().eta;
  const double rho = std::sqrt(rho_sq);
  const double tau1 = -std::atan2(c.h2, c.h1);
  const double tau2 = -std::atanh(c.h0 / rho);

  const Matrix2 r1 = half_exp2(eta[0], -1, tau1);
  const Matrix2 r1_inv = half_exp2(eta[0], -1, -tau1);
  const Matrix2 r2 = half_exp2(eta[2], 1, tau2);
  const Matrix2 r2_inv = half_exp2(eta[2], 1, -tau2);

  NormalForm2 nf;
  nf.cls = EigenClass::kHyperbolic;
  nf.extension = true;
  nf.omega = std::sqrt(rho_sq - c.h0 * c.h0);
  nf.transform.forward = r2 * r1;
  nf.transform.inverse = r1_inv * r2_inv;
  nf.result = nf.transform.forward * h * nf.transform.inverse;
  return nf;
}

Invariants4 k_invariants(const Matrix4& h) {
  const Matrix4 sq = h * h;
  Invariants4 k;
  k.k1 = sq.trace() / 4.0;
  k.k2 = (sq * sq).trace() / 16.0 - k.k1 * k.k1 / 4.0;
  return k;
}

Spectrum eigen4(const Matrix4& h) {
  require_hamiltonian(h, "eigen4");
  const Matrix4 sq = h * h;
  const double k1 = sq.trace() / 4.0;
  const double quartic = (sq * sq).trace() / 16.0;
  double k2 = quartic - k1 * k1 / 4.0;
  const double k2_zero = 64 * kEps * (std::abs(quartic) + k1 * k1 / 4.0) + kTiny;
  if (k2 < -k2_zero) {
    throw Error(ErrorCode::kComplexEigenvalues,
                "eigen4: K2 = " + std::to_string(k2) + " < 0; eigenvalues are off-axis");
  }
  k2 = std::max(k2, 0.0);
  const double split = 2.0 * std::sqrt(k2);
  const double zero = 64 * kEps * (std::abs(k1) + split) + kTiny;
  Spectrum s;
  s.pairs.push_back(pair_from_square(k1 + split, zero));
  s.pairs.push_back(pair_from_square(k1 - split, zero));
  s.sort();
  return s;
}

ComplexDiagonalization complex_diag2(const NormalForm2& nf) {
  if (nf.cls != EigenClass::kElliptic) {
    throw Error(ErrorCode::kHyperbolicBlock, "complex_diag2: normal form is not elliptic");
  }
  using C = std::complex<double>;
  const double r = 1.0 / std::sqrt(2.0);
  const C i(0.0, 1.0);
  ComplexDiagonalization d;
  d.change_of_basis << r * i, r, -r * i, r;
  d.inverse << -r * i, r * i, r, r;
  Eigen::Matrix2cd normal;
  normal << 0.0, nf.omega, -nf.omega, 0.0;
  d.diagonal = d.change_of_basis * normal * d.inverse;
  d.lambda_plus = C(0.0, nf.omega);
  d.lambda_minus = C(0.0, -nf.omega);
  return d;
}

Spectrum block_spectrum(const Matrix& block_diagonal) {
  require_phase_matrix(block_diagonal, "block_spectrum");
  Spectrum s;
  for (Eigen::Index p = 0; p < pair_count(block_diagonal); ++p) {
    const Spectrum one = eigen2(block(block_diagonal, p));
    s.pairs.push_back(one.pairs.front());
  }
  s.sort();
  return s;
}

Spectrum eigenvalues(const Matrix& h, const JacobiConfig& config) {
  require_phase_matrix(h, "eigenvalues");
  require_hamiltonian(h, "eigenvalues");
  if (h.rows() == 2) return eigen2(h);
  if (h.rows() == 4) return eigen4(h);
  return block_spectrum(jacobi_decouple(h, config).result);
}

NormalForm normal_form(const Matrix& h, const JacobiConfig& config) {
  require_phase_matrix(h, "normal_form");
  require_hamiltonian(h, "normal_form");
  NormalForm out;
  out.decoupling = jacobi_decouple(h, config);
  const Matrix& decoupled = out.decoupling.result;
  const Eigen::Index dim = h.rows();

  SymplecticTransform blocks = SymplecticTransform::identity(dim);
  for (Eigen::Index p = 0; p < pair_count(h); ++p) {
    const Matrix2 b = block(decoupled, p);
    const BlockCoefficients c = coefficients(b);
    const double magnitude = c.h0 * c.h0 + c.h1 * c.h1 + c.h2 * c.h2;
    const double radicand = -c.h0 * c.h0 + c.h1 * c.h1 + c.h2 * c.h2;
    const double zero = 64 * kEps * magnitude;
    NormalForm2 nf;
    if (radicand < -zero) {
      nf = normal_form2(b);
    } else if (radicand > zero) {
      nf = hyperbolic_normal_form2(b);
    } else {
      nf.cls = EigenClass::kDegenerateZero;
      nf.transform = SymplecticTransform::identity(2);
      nf.result = b;
    }
    blocks.forward.block<2, 2>(2 * p, 2 * p) = nf.transform.forward;
    blocks.inverse.block<2, 2>(2 * p, 2 * p) = nf.transform.inverse;
    out.blocks.push_back(nf);
  }
  out.transform = out.decoupling.transform.followed_by(blocks);
  out.result = blocks.forward * decoupled * blocks.inverse;
  return out;
}

Matrix2 block_exp(const Matrix2& b) {
  const double shift = b.trace() / 2.0;
  const Matrix2 free = b - shift * Matrix2::Identity();
  const double q = -free.determinant();  // free^2 = q I
  double even = 0.0, odd = 0.0;
  if (std::abs(q) < 1.0) {
    even_odd_series(q, even, odd);
  } else if (q < 0.0) {
    const double w = std::sqrt(-q);
    even = std::cos(w);
    odd = std::sin(w) / w;
  } else {
    const double l = std::sqrt(q);
    even = std::cosh(l);
    odd = std::sinh(l) / l;
  }
  return std::exp(shift) * (even * Matrix2::Identity() + odd * free);
}

Matrix2 block_log(const Matrix2& m) {
  const double c0 = m.trace() / 2.0;
  const Matrix2 s = m - c0 * Matrix2::Identity();
  const double q = -s.determinant();  // s^2 = q I
  const double zero = 64 * kEps * (1.0 + c0 * c0);
  if (q < -zero) {
    const double sn = std::sqrt(-q);
    const double angle = std::atan2(sn, c0);  // (0, pi)
    return (angle / sn) * s;
  }
  if (q > zero) {
    if (c0 <= 0.0) {
      throw Error(ErrorCode::kLogBranch,
                  "block_log: block with real eigenvalues and negative trace has no real logarithm");
    }
    const double sh = std::sqrt(q);
    return (std::log(c0 + sh) / sh) * s;
  }
  if (c0 < 0.0) {
    throw Error(ErrorCode::kLogBranch, "block_log: rotation angle at pi, logarithm branch is ambiguous");
  }
  return s;
}

Matrix sympl_exp(const Matrix& h, const JacobiConfig& config) {
  require_phase_matrix(h, "sympl_exp");
  require_hamiltonian(h, "sympl_exp");
  if (h.rows() == 2) return block_exp(h);
  const JacobiReport r = jacobi_decouple(h, config);
  Matrix e = Matrix::Zero(h.rows(), h.cols());
  for (Eigen::Index p = 0; p < pair_count(h); ++p) {
    e.block<2, 2>(2 * p, 2 * p) = block_exp(block(r.result, p));
  }
  return r.transform.inverse * e * r.transform.forward;
}

Matrix sympl_log(const Matrix& m, const JacobiConfig& config) {
  require_phase_matrix(m, "sympl_log");
  const double scale = std::max(1.0, max_abs(m));
  if (symplectic_residual(m) > kStructureTolerance * scale * scale) {
    throw Error(ErrorCode::kNotSymplectic, "sympl_log: input is not symplectic (residual " +
                                               std::to_string(symplectic_residual(m)) + ")");
  }
  if (m.rows() == 2) return hamiltonian_part(block_log(m));

  const JacobiReport r = jacobi_decouple(hamiltonian_part(m), config);
  const Matrix decoupled = r.transform.forward * m * r.transform.inverse;
  const double leftover = relative_off_block_residual(decoupled);
  if (leftover > 1e-8) {
    throw Error(ErrorCode::kNoConvergence,
                "sympl_log: decoupling the Hamiltonian part left M coupled (residual " +
                    std::to_string(leftover) + ")");
  }
  Matrix l = Matrix::Zero(m.rows(), m.cols());
  for (Eigen::Index p = 0; p < pair_count(m); ++p) {
    l.block<2, 2>(2 * p, 2 * p) = block_log(block(decoupled, p));
  }
  return hamiltonian_part(r.transform.inverse * l * r.transform.forward);
}

}  // namespace symplectica
