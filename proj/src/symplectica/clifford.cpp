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

#include "symplectica/clifford.hpp"

#include <cmath>
#include <string>

#include "symplectica/errors.hpp"

namespace symplectica {
namespace {

PauliBasis make_pauli() {
  PauliBasis p;
  p.eta[0] << 0, 1, -1, 0;
  p.eta[1] << 0, 1, 1, 0;
  p.eta[2] = p.eta[0] * p.eta[1];
  p.eta[3] = Matrix2::Identity();
  return p;
}

bool exactly_equal(const Matrix4& a, const Matrix4& b) { return (a - b).cwiseAbs().maxCoeff() == 0.0; }

}  // namespace

const PauliBasis& pauli_basis() {
  static const PauliBasis basis = make_pauli();
  return basis;
}

std::array<double, 4> decompose2(const Matrix2& m) {
  const auto& eta = pauli_basis().eta;
  std::array<double, 4> h{};
  for (int k = 0; k < 4; ++k) h[k] = (eta[k].transpose() * m).trace() / 2.0;
  return h;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return c;
}

DiracBasis build_dirac_basis() {
  const auto& eta = pauli_basis().eta;
  DiracBasis d;
  auto& g = d.gamma;
  g[0] = kronecker(eta[3], eta[0]);
  g[1] = -kronecker(eta[2], eta[1]);
  g[2] = kronecker(eta[1], eta[1]);
  g[3] = -kronecker(eta[3], eta[2]);
  g[4] = g[0] * g[1];
  g[5] = g[0] * g[2];
  g[6] = g[0] * g[3];
  g[7] = g[2] * g[3];
  g[8] = g[3] * g[1];
  g[9] = g[1] * g[2];
  g[14] = g[0] * g[1] * g[2] * g[3];
  for (int k = 0; k < 4; ++k) g[10 + k] = g[14] * g[k];
  g[15] = Matrix4::Identity();

  const Matrix4& sum = g[0];
  for (int k = 0; k < 16; ++k) {
    d.signature[k] = (g[k] * g[k])(0, 0) > 0 ? 1 : -1;
    d.symmetric[k] = exactly_equal(g[k], g[k].transpose());
    d.hamiltonian[k] = exactly_equal(g[k].transpose(), sum * g[k] * sum);
  }
  return d;
}

const DiracBasis& dirac_basis() {
  static const DiracBasis basis = build_dirac_basis();
  return basis;
}

Matrix4 DiracCoefficients::reconstruct(const DiracBasis& basis) const {
  Matrix4 out = Matrix4::Zero();
  for (int k = 0; k < 16; ++k) out += m[k] * basis.gamma[k];
  return out;
}

DiracCoefficients decompose4(const Matrix4& m, const DiracBasis& basis) {
  DiracCoefficients c;
  for (int k = 0; k < 16; ++k) {
    // Tr(A^T B) is the elementwise dot product.
    c.m[k] = basis.gamma[k].cwiseProduct(m).sum() / 4.0;
  }
  return c;
}

Matrix4 EMForm::assemble() const {
  const auto& g = dirac_basis().gamma;
  Matrix4 h = energy * g[0];
  for (int i = 0; i < 3; ++i) h += p[i] * g[1 + i] + e[i] * g[4 + i] + b[i] * g[7 + i];
  return h;
}

EMForm EMForm::from_coefficients(const DiracCoefficients& c) {
  EMForm f;
  f.energy = c.m[0];
  f.p = Vector3(c.m[1], c.m[2], c.m[3]);
  f.e = Vector3(c.m[4], c.m[5], c.m[6]);
  f.b = Vector3(c.m[7], c.m[8], c.m[9]);
  return f;
}

EMForm em_form(const Matrix4& h, double tolerance) {
  const DiracCoefficients c = decompose4(h);
  for (int k = 10; k < 16; ++k) {
    if (std::abs(c.m[k]) > tolerance) {
      throw Error(ErrorCode::kNotHamiltonian,
                  "em_form: skew-Hamiltonian coefficient m" + std::to_string(k) + " = " +
                      std::to_string(c.m[k]) + " exceeds tolerance");
    }
  }
  return EMForm::from_coefficients(c);
}

}  // namespace symplectica
