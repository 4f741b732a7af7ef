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

#include "symplectica/decouple4.hpp"
#include "symplectica/errors.hpp"
#include "test_support.hpp"

namespace {

using namespace symplectica;
using symtest::gamma;

Vector3 cross(const Vector3& a, const Vector3& b) { return a.cross(b); }

EMForm random_form(symtest::Rng& rng) {
  EMForm f;
  f.energy = rng.uniform(-1, 1);
  f.p = Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  f.e = Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  f.b = Vector3(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
  return f;
}

ErrorCode decouple_code(const Matrix4& h, Strategy s) {
  try {
    decouple4(h, Decouple4Options{s, 1e-12, 64});
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode{};
}

TEST(AuxInvariants, Examples) {
  const AuxInvariants zero = aux_invariants(Matrix4(gamma(0)));
  EXPECT_EQ(zero.eps_r, 0.0);
  EXPECT_EQ(zero.eps_g, 0.0);
  EXPECT_EQ(zero.eps_b, 0.0);
  EXPECT_EQ(zero.r.norm() + zero.g.norm() + zero.b.norm(), 0.0);

  EMForm f;
  f.energy = 2.0;
  f.e = Vector3(1, 0, 0);
  f.b = Vector3(0, 1, 0);
  const AuxInvariants a = aux_invariants(f);
  EXPECT_EQ(a.eps_r, 0.0);
  EXPECT_EQ(a.b, Vector3(0, 2, 0));
}

TEST(AuxInvariants, FormulasAgainstSquareTraces) {
  symtest::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const EMForm f = random_form(rng);
    const Matrix4 h = f.assemble();
    const AuxInvariants a = aux_invariants(h);
    // Direct evaluation of the defining formulas.
    EXPECT_NEAR(a.eps_r, f.e.dot(f.b), 1e-14);
    EXPECT_NEAR(a.eps_g, f.b.dot(f.p), 1e-14);
    EXPECT_NEAR(a.eps_b, f.e.dot(f.p), 1e-14);
    EXPECT_LT((a.r - (f.energy * f.p + cross(f.b, f.e))).norm(), 1e-14);
    EXPECT_LT((a.g - (f.energy * f.e + cross(f.p, f.b))).norm(), 1e-14);
    EXPECT_LT((a.b - (f.energy * f.b + cross(f.e, f.p))).norm(), 1e-14);
    // The same quantities read off H^2.
    const Matrix4 sq = h * h;
    EXPECT_NEAR((gamma(14).transpose() * sq).trace() / 8, a.eps_r, 1e-10);
    EXPECT_NEAR((gamma(10).transpose() * sq).trace() / 8, a.eps_g, 1e-10);
    for (int j = 0; j < 3; ++j) EXPECT_NEAR((gamma(11 + j).transpose() * sq).trace() / 8, a.b[j], 1e-10);
    const SteeringInvariants s = steering_from_square(h);
    EXPECT_NEAR(s.eps_r, a.eps_r, 1e-10);
    EXPECT_NEAR(s.eps_g, a.eps_g, 1e-10);
    EXPECT_LT((s.b - a.b).norm(), 1e-10);
    const SteeringInvariants k = steering_from_skew(sq / 2);
    EXPECT_NEAR(k.eps_r, a.eps_r, 1e-10);
    EXPECT_NEAR(k.eps_g, a.eps_g, 1e-10);
    EXPECT_LT((k.b - a.b).norm(), 1e-10);
  }
}

TEST(AuxInvariants, RejectsUnstructured) {
  EXPECT_THROW(aux_invariants(Matrix4(gamma(0) + gamma(14))), Error);
}

TEST(TransformTable, Examples) {
  symtest::Rng rng(32);
  const AuxInvariants a = aux_invariants(random_form(rng));
  for (int k = 0; k <= 6; ++k) {
    const ScalarProducts p = transform_table_eps(k, 0.0, a);
    EXPECT_NEAR(p.eps_r, a.eps_r, 1e-15);
    EXPECT_NEAR(p.eps_g, a.eps_g, 1e-15);
    EXPECT_NEAR(p.eps_b, a.eps_b, 1e-15);
  }
  EXPECT_EQ(transform_table_eps(4, 0.8, a).eps_r, a.eps_r);

  AuxInvariants e;
  e.eps_r = 1.0;
  e.eps_g = 2.0;
  EXPECT_NEAR(transform_table_eps(0, -std::atan(0.5), e).eps_r, 0.0, 1e-15);
  EXPECT_THROW(transform_table_eps(7, 0.1, a), Error);
  EXPECT_THROW(transform_table_eps(-1, 0.1, a), Error);
}

TEST(TransformTable, MatchesDirectTransformation) {
  symtest::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 h = random_form(rng).assemble();
    const AuxInvariants before = aux_invariants(h);
    for (int k = 0; k <= 6; ++k) {
      const double tau = rng.uniform(-1.5, 1.5);
      const SymplecticTransform t = generator_exp(GeneratorId(k), tau);
      const AuxInvariants after = aux_invariants(Matrix4(t.forward * h * t.inverse));
      const ScalarProducts p = transform_table_eps(k, tau, before);
      EXPECT_NEAR(p.eps_r, after.eps_r, 1e-10) << k;
      EXPECT_NEAR(p.eps_g, after.eps_g, 1e-10) << k;
      EXPECT_NEAR(p.eps_b, after.eps_b, 1e-10) << k;
    }
  }
}

TEST(TransformTable, InvarianceClasses) {
  symtest::Rng rng(34);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 h = random_form(rng).assemble();
    const AuxInvariants a = aux_invariants(h);
    auto moved = [&](int k) {
      const SymplecticTransform t = generator_exp(GeneratorId(k), rng.uniform(-1, 1));
      return aux_invariants(Matrix4(t.forward * h * t.inverse));
    };
    for (int k : {4, 5, 6}) EXPECT_NEAR(moved(k).eps_r, a.eps_r, 1e-10);
    for (int k : {1, 2, 3}) EXPECT_NEAR(moved(k).eps_g, a.eps_g, 1e-10);
    for (int k : {7, 8, 9}) {
      const AuxInvariants m = moved(k);
      EXPECT_NEAR(m.eps_r, a.eps_r, 1e-10);
      EXPECT_NEAR(m.eps_g, a.eps_g, 1e-10);
      EXPECT_NEAR(m.eps_b, a.eps_b, 1e-10);
      EXPECT_NEAR(m.b.norm(), a.b.norm(), 1e-10);
    }
  }
}

TEST(Decouple4, AlreadyBlockDiagonal) {
  const Matrix4 h = 1.5 * gamma(0) + 0.3 * gamma(1) + 0.2 * gamma(6) + 0.4 * gamma(8);
  ASSERT_EQ((h.block<2, 2>(0, 2).norm()), 0.0);
  ASSERT_EQ((h.block<2, 2>(2, 0).norm()), 0.0);
  const DecoupleReport r = decouple4(h);
  EXPECT_LE(r.passes, 1);
  EXPECT_LT((r.transform.forward - Matrix::Identity(4, 4)).norm(), 1e-12);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(Decouple4, ScalarSquareInputs) {
  symtest::Rng rng(41);
  const Matrix4 mixed = (Matrix4() << 0, 0.8, 0, 0, -0.8, 0, 0, 0, 0, 0, 0, -0.8, 0, 0, 0.8, 0).finished();
  const Matrix4 boost = 0.6 * gamma(3);
  for (const Matrix4& d : {Matrix4(1.1 * gamma(0)), mixed, boost}) {
    for (int t = 0; t < 20; ++t) {
      const SymplecticTransform m = symtest::random_transform(4, 6, rng, 1.0);
      const Matrix4 h = m.forward * d * m.inverse;
      const DecoupleReport r = decouple4(h);
      EXPECT_LT(r.residual, 1e-12 * h.norm());
      EXPECT_TRUE(is_symplectic(r.transform.forward, 1e-9));
      EXPECT_LT((r.transform.forward * h * r.transform.inverse - r.result).norm(), 1e-9 * h.norm());
      EXPECT_LT((r.result * r.result - d * d).norm(), 1e-9 * h.norm() * h.norm());
    }
  }
}

TEST(Decouple4, ForwardConstructionBothStrategies) {
  symtest::Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    const double w1 = rng.uniform(0.3, 3.0), w2 = rng.uniform(0.3, 3.0);
    const symtest::Constructed c = symtest::forward_construct({w1, w2}, 6, rng);
    for (Strategy s : {Strategy::kBivectorBoost, Strategy::kVectorBoost}) {
      const DecoupleReport r = decouple4(c.h, Decouple4Options{s, 1e-12, 64});
      EXPECT_LE(r.residual, 1e-12 * c.h.norm());
      EXPECT_LT((r.transform.forward * c.h * r.transform.inverse - r.result).norm(), 1e-9 * c.h.norm());
      EXPECT_TRUE(is_symplectic(r.transform.forward, 1e-9 * r.transform.forward.squaredNorm()));
      const EMForm f = em_form(r.result, 1e-9);
      const double tol = 1e-10 * c.h.norm();
      EXPECT_LT(std::abs(f.p.y()) + std::abs(f.e.y()) + std::abs(f.b.x()) + std::abs(f.b.z()), tol);
      // Each 2x2 block carries one of the constructed frequencies.
      std::vector<double> got;
      for (int p = 0; p < 2; ++p) {
        const Matrix2 b = r.result.block<2, 2>(2 * p, 2 * p);
        got.push_back(std::sqrt(b.determinant()));
      }
      std::sort(got.begin(), got.end());
      std::vector<double> want = {w1, w2};
      std::sort(want.begin(), want.end());
      EXPECT_NEAR(got[0], want[0], 1e-8);
      EXPECT_NEAR(got[1], want[1], 1e-8);
    }
  }
}

TEST(Decouple4, MatchesClosedFormSpectrum) {
  EMForm f;
  f.p = Vector3(1, 0, 0);
  f.e = Vector3(0, 0, 2);
  const Matrix4 h = f.assemble();
  const Matrix4 sq = h * h;
  const double k1 = sq.trace() / 4, k2 = (sq * sq).trace() / 16 - k1 * k1 / 4;
  ASSERT_GE(k2, -1e-12);
  const DecoupleReport r = decouple4(h);
  std::vector<double> got;
  for (int p = 0; p < 2; ++p) {
    const Matrix2 b = r.result.block<2, 2>(2 * p, 2 * p);
    got.push_back(-b.determinant());  // lambda^2 of a trace-free block
  }
  std::sort(got.begin(), got.end());
  const double root = 2 * std::sqrt(std::max(k2, 0.0));
  EXPECT_NEAR(got[0], k1 - root, 1e-9);
  EXPECT_NEAR(got[1], k1 + root, 1e-9);
}

TEST(Decouple4, ComplexEigenvaluesDetected) {
  // Pure bivector with E.B != 0 has K2 = -(E.B)^2 < 0.
  EMForm f;
  f.e = Vector3(1, 0.5, 0);
  f.b = Vector3(0.8, 0, 0.3);
  const Matrix4 h = f.assemble();
  EXPECT_EQ(decouple_code(h, Strategy::kBivectorBoost), ErrorCode::kComplexEigenvalues);
  EXPECT_EQ(decouple_code(h, Strategy::kVectorBoost), ErrorCode::kComplexEigenvalues);

  symtest::Rng rng(36);
  int tested = 0;
  while (tested < 300) {
    const Matrix4 g = symtest::random_hamiltonian4(rng);
    const Matrix4 sq = g * g;
    const double k1 = sq.trace() / 4, k2 = (sq * sq).trace() / 16 - k1 * k1 / 4;
    if (k2 > -1e-6) continue;
    ++tested;
    EXPECT_EQ(decouple_code(g, Strategy::kBivectorBoost), ErrorCode::kComplexEigenvalues);
  }
}

TEST(Decouple4, SkewHamiltonianInput) {
  symtest::Rng rng(37);
  int done = 0;
  while (done < 100) {
    const Matrix4 h = symtest::random_hamiltonian4(rng);
    const Matrix4 sq = h * h;
    const double k1 = sq.trace() / 4, k2 = (sq * sq).trace() / 16 - k1 * k1 / 4;
    if (k2 < 1e-6) continue;
    ++done;
    const DecoupleReport r = decouple4(sq, Structure::kSkewHamiltonian, Decouple4Options{});
    EXPECT_LE(r.residual, 1e-12 * sq.norm());
    EXPECT_TRUE(is_skew_hamiltonian(r.result, 1e-10 * sq.norm()));
  }
}

TEST(Decouple4, ClassifyStructure) {
  EXPECT_EQ(classify_structure(gamma(0)), Structure::kHamiltonian);
  EXPECT_EQ(classify_structure(Matrix::Identity(4, 4)), Structure::kSkewHamiltonian);
  try {
    classify_structure(Matrix(gamma(0) + gamma(15)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotHamiltonian);
  }
}

}  // namespace
