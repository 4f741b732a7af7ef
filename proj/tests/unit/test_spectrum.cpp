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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "symplectica/errors.hpp"
#include "symplectica/spectrum.hpp"
#include "test_support.hpp"

namespace {

using namespace symplectica;
using symtest::gamma;

const auto& eta = pauli_basis().eta;

Matrix2 block(double h0, double h1, double h2) { return h0 * eta[0] + h1 * eta[1] + h2 * eta[2]; }

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(Eigen2, Examples) {
  const Spectrum a = eigen2(3.0 * eta[0]);
  ASSERT_EQ(a.pairs.size(), 1u);
  EXPECT_EQ(a.pairs[0].cls, EigenClass::kElliptic);
  EXPECT_EQ(a.pairs[0].re, 0.0);
  EXPECT_NEAR(a.pairs[0].im, 3.0, 1e-15);

  const Spectrum b = eigen2(eta[1]);
  EXPECT_EQ(b.pairs[0].cls, EigenClass::kHyperbolic);
  EXPECT_NEAR(b.pairs[0].re, 1.0, 1e-15);

  const Spectrum c = eigen2(block(5, 3, 4));
  EXPECT_EQ(c.pairs[0].cls, EigenClass::kDegenerateZero);
  EXPECT_EQ(c.pairs[0].omega, 0.0);

  const auto values = a.eigenvalues();
  ASSERT_EQ(values.size(), 2u);
  EXPECT_EQ(values[0], -values[1]);
}

TEST(NormalForm2, Examples) {
  const NormalForm2 a = normal_form2(2.0 * eta[0]);
  EXPECT_NEAR(a.omega, 2.0, 1e-15);
  EXPECT_LT((a.transform.forward - Matrix::Identity(2, 2)).norm(), 1e-15);

  const NormalForm2 b = normal_form2(block(2, 1, 0));
  EXPECT_NEAR(b.omega, std::sqrt(3.0), 1e-15);
  EXPECT_LT((b.result - std::sqrt(3.0) * eta[0]).cwiseAbs().maxCoeff(), 1e-14);

  const NormalForm2 c = normal_form2(block(2, 0.6, 0.8));
  EXPECT_NEAR(c.omega, std::sqrt(3.0), 1e-15);
  EXPECT_LT((c.result - std::sqrt(3.0) * eta[0]).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(NormalForm2, SignConventionsAndZeroH1) {
  for (double h1 : {-1.2, -0.3, 0.0, 0.3, 1.2}) {
    for (double h2 : {-0.9, 0.0, 0.9}) {
      for (double h0 : {-2.5, 2.5}) {
        const Matrix2 h = block(h0, h1, h2);
        const NormalForm2 nf = normal_form2(h);
        const double omega = std::copysign(std::sqrt(h0 * h0 - h1 * h1 - h2 * h2), h0);
        EXPECT_NEAR(nf.omega, omega, 1e-14);
        EXPECT_LT((nf.result - omega * eta[0]).cwiseAbs().maxCoeff(), 1e-13) << h0 << " " << h1 << " " << h2;
        EXPECT_LT((nf.transform.forward * nf.transform.inverse - Matrix::Identity(2, 2)).norm(), 1e-13);
        EXPECT_NEAR(nf.transform.forward.determinant(), 1.0, 1e-13);
        EXPECT_NEAR(std::abs(nf.omega), eigen2(h).pairs[0].im, 1e-12);
      }
    }
  }
}

TEST(NormalForm2, HyperbolicBlocks) {
  EXPECT_EQ(code_of([] { normal_form2(eta[1]); }), ErrorCode::kHyperbolicBlock);
  EXPECT_EQ(code_of([] { normal_form2(block(5, 3, 4)); }), ErrorCode::kHyperbolicBlock);
  const NormalForm2 nf = hyperbolic_normal_form2(block(0.5, -1.0, 0.8));
  const double lambda = std::sqrt(1.0 + 0.64 - 0.25);
  EXPECT_TRUE(nf.extension);
  EXPECT_EQ(nf.cls, EigenClass::kHyperbolic);
  EXPECT_NEAR(nf.omega, lambda, 1e-14);
  EXPECT_LT((nf.result - lambda * eta[1]).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(code_of([] { hyperbolic_normal_form2(eta[0]); }), ErrorCode::kHyperbolicBlock);
}

TEST(Eigen4, SpecialCases) {
  EMForm vec;
  vec.energy = 1.1;
  vec.p = Vector3(0.3, -0.4, 0.2);
  Invariants4 k = k_invariants(vec.assemble());
  EXPECT_NEAR(k.k1, -vec.energy * vec.energy + vec.p.squaredNorm(), 1e-14);
  EXPECT_NEAR(k.k2, 0.0, 1e-14);

  EMForm biv;
  biv.e = Vector3(0.5, 0.1, -0.7);
  biv.b = Vector3(-0.2, 0.9, 0.3);
  k = k_invariants(biv.assemble());
  EXPECT_NEAR(k.k1, biv.e.squaredNorm() - biv.b.squaredNorm(), 1e-14);
  EXPECT_NEAR(k.k2, -std::pow(biv.e.dot(biv.b), 2), 1e-14);
  EXPECT_EQ(code_of([&] { eigen4(biv.assemble()); }), ErrorCode::kComplexEigenvalues);

  EMForm f;
  f.energy = 1.0;
  f.e = Vector3(0.3, 0, 0);
  k = k_invariants(f.assemble());
  EXPECT_NEAR(k.k1, -0.91, 1e-15);
  EXPECT_NEAR(k.k2, 0.0, 1e-15);
  const Spectrum s = eigen4(f.assemble());
  ASSERT_EQ(s.pairs.size(), 2u);
  for (const EigenPair& p : s.pairs) {
    EXPECT_EQ(p.cls, EigenClass::kElliptic);
    EXPECT_NEAR(p.im, std::sqrt(0.91), 1e-8);
  }
  const auto general = Eigen::EigenSolver<Matrix>(f.assemble()).eigenvalues();
  for (Eigen::Index i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(general(i).imag()), std::sqrt(0.91), 1e-8);
}

TEST(Eigen4, CrossCheckWithFieldForm) {
  symtest::Rng rng(51);
  for (int t = 0; t < 200; ++t) {
    const Matrix4 h = symtest::random_hamiltonian4(rng);
    const EMForm f = em_form(h);
    const Invariants4 k = k_invariants(h);
    EXPECT_NEAR(k.k1, -f.energy * f.energy - f.b.squaredNorm() + f.p.squaredNorm() + f.e.squaredNorm(), 1e-10);
    const Vector3 bv = f.energy * f.b + f.e.cross(f.p);
    EXPECT_NEAR(k.k2, bv.squaredNorm() - std::pow(f.e.dot(f.b), 2) - std::pow(f.b.dot(f.p), 2), 1e-10);
  }
}

TEST(Eigen4, InvariantUnderSimilarity) {
  symtest::Rng rng(52);
  int done = 0;
  while (done < 100) {
    const Matrix4 h = symtest::random_hamiltonian4(rng);
    if (k_invariants(h).k2 < 1e-3) continue;
    ++done;
    const SymplecticTransform t = symtest::random_transform(4, 6, rng, 0.5);
    const Spectrum a = eigen4(h);
    const Spectrum b = eigen4(Matrix4(t.forward * h * t.inverse));
    for (int i = 0; i < 2; ++i) {
      EXPECT_NEAR(a.pairs[i].re, b.pairs[i].re, 1e-9);
      EXPECT_NEAR(a.pairs[i].im, b.pairs[i].im, 1e-9);
    }
  }
}

TEST(ComplexDiag2, Examples) {
  using C = std::complex<double>;
  for (double omega : {1.0, 0.0, 2.5}) {
    NormalForm2 nf;
    nf.omega = omega;
    const ComplexDiagonalization d = complex_diag2(nf);
    EXPECT_FALSE(d.symplectic);
    EXPECT_LT(std::abs(d.diagonal(0, 0) - C(0, omega)), 1e-15);
    EXPECT_LT(std::abs(d.diagonal(1, 1) - C(0, -omega)), 1e-15);
    EXPECT_LT(std::abs(d.diagonal(0, 1)) + std::abs(d.diagonal(1, 0)), 1e-15);
    EXPECT_LT((d.change_of_basis * d.inverse - Eigen::Matrix2cd::Identity()).norm(), 1e-15);
  }
  NormalForm2 hyper;
  hyper.cls = EigenClass::kHyperbolic;
  EXPECT_EQ(code_of([&] { complex_diag2(hyper); }), ErrorCode::kHyperbolicBlock);
}

TEST(Spectrum, SortedAndPaired) {
  symtest::Rng rng(53);
  const symtest::Constructed c = symtest::forward_construct({0.5, 2.0, 1.25}, 9, rng);
  const Spectrum s = eigenvalues(c.h);
  ASSERT_EQ(s.pairs.size(), 3u);
  EXPECT_NEAR(s.pairs[0].im, 2.0, 1e-8);
  EXPECT_NEAR(s.pairs[1].im, 1.25, 1e-8);
  EXPECT_NEAR(s.pairs[2].im, 0.5, 1e-8);
  const auto values = s.eigenvalues();
  for (size_t i = 0; i < values.size(); i += 2) EXPECT_EQ(values[i], -values[i + 1]);
}

TEST(NormalForm, BlocksAreOscillators) {
  symtest::Rng rng(54);
  const symtest::Constructed c = symtest::forward_construct({0.8, 1.7}, 6, rng);
  const NormalForm nf = normal_form(c.h);
  EXPECT_LT(symtest::relative_frobenius(nf.transform.forward * c.h * nf.transform.inverse, nf.result), 1e-9);
  for (int p = 0; p < 2; ++p) {
    const double omega = nf.blocks[p].omega;
    EXPECT_LT((nf.result.block<2, 2>(2 * p, 2 * p) - omega * eta[0]).cwiseAbs().maxCoeff(), 1e-8);
  }
  std::vector<double> w = {std::abs(nf.blocks[0].omega), std::abs(nf.blocks[1].omega)};
  std::sort(w.begin(), w.end());
  EXPECT_NEAR(w[0], 0.8, 1e-8);
  EXPECT_NEAR(w[1], 1.7, 1e-8);
}

TEST(NormalForm, HyperbolicAndZeroBlocks) {
  Matrix h = Matrix::Zero(6, 6);
  h.block<2, 2>(0, 0) = 0.6 * eta[1] + 0.2 * eta[0];
  const NormalForm nf = normal_form(h);
  EXPECT_TRUE(nf.blocks[0].extension);
  EXPECT_EQ(nf.blocks[1].cls, EigenClass::kDegenerateZero);
  EXPECT_EQ(nf.blocks[2].cls, EigenClass::kDegenerateZero);
}

TEST(SymplExp, Examples) {
  EXPECT_LT((sympl_exp(Matrix::Zero(4, 4)) - Matrix::Identity(4, 4)).norm(), 1e-15);
  const double w = 1.3;
  const Matrix e = sympl_exp(w * gamma(0));
  EXPECT_LT((e - (std::cos(w) * Matrix::Identity(4, 4) + std::sin(w) * gamma(0))).norm(), 1e-14);
  const Matrix2 hyp = 0.7 * eta[1];
  EXPECT_LT((block_exp(hyp) - (std::cosh(0.7) * Matrix2::Identity() + std::sinh(0.7) * eta[1])).norm(), 1e-14);
  EXPECT_LT((block_exp(block(5, 3, 4)) - (Matrix2::Identity() + block(5, 3, 4))).norm(), 1e-14);
}

TEST(SymplExp, TaylorOracle) {
  symtest::Rng rng(55);
  for (int t = 0; t < 30; ++t) {
    const symtest::Constructed c = symtest::forward_construct({rng.uniform(0.2, 3), rng.uniform(0.2, 3),
                                                               rng.uniform(0.2, 3)},
                                                              6, rng, 0.5);
    const Matrix e = sympl_exp(c.h);
    EXPECT_LT(symtest::relative_frobenius(e, symtest::taylor_exp(c.h)), 1e-9);
    EXPECT_TRUE(is_symplectic(e, 1e-9 * e.squaredNorm()));
  }
}

TEST(SymplLog, Examples) {
  EXPECT_LT(sympl_log(Matrix::Identity(4, 4)).norm(), 1e-15);
  const Matrix m = sympl_exp(0.4 * gamma(0));
  EXPECT_LT((sympl_log(m) - 0.4 * gamma(0)).norm(), 1e-14);

  const SymplecticTransform r5 = generator_exp(GeneratorId(5), 0.8);
  const SymplecticTransform r9 = generator_exp(GeneratorId(9), 0.3);
  const Matrix core = std::cos(1.2) * Matrix::Identity(4, 4) + std::sin(1.2) * gamma(0);
  const Matrix big = r5.forward * r9.forward * core * r9.inverse * r5.inverse;
  const Matrix l = sympl_log(big);
  EXPECT_TRUE(is_hamiltonian(l, 1e-10));
  EXPECT_LT(symtest::relative_frobenius(sympl_exp(l), big), 1e-8);
  const Spectrum s = eigen4(l);
  for (const EigenPair& p : s.pairs) EXPECT_NEAR(p.im, 1.2, 1e-8);
}

TEST(SymplLog, Errors) {
  EXPECT_EQ(code_of([] { sympl_log(2.0 * Matrix::Identity(4, 4)); }), ErrorCode::kNotSymplectic);
  EXPECT_EQ(code_of([] { sympl_log(Matrix(-Matrix::Identity(2, 2))); }), ErrorCode::kLogBranch);
  const Matrix2 neg = -(std::cosh(0.5) * Matrix2::Identity() + std::sinh(0.5) * eta[1]);
  EXPECT_EQ(code_of([&] { block_log(neg); }), ErrorCode::kLogBranch);
  EXPECT_EQ(code_of([] { sympl_exp(Matrix::Identity(4, 4)); }), ErrorCode::kNotHamiltonian);
}

TEST(SymplLog, RoundTrip) {
  symtest::Rng rng(56);
  for (int t = 0; t < 30; ++t) {
    const symtest::Constructed c = symtest::forward_construct({rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0)},
                                                              6, rng, 0.5);
    EXPECT_LT((sympl_log(sympl_exp(c.h)) - c.h).norm(), 1e-8);
  }
  const Matrix2 hyp = 0.9 * eta[2] - 0.4 * eta[1];
  EXPECT_LT((block_log(block_exp(hyp)) - hyp).norm(), 1e-14);
}

}  // namespace
