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

#include "symplectica/selftest.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "symplectica/decouple4.hpp"
#include "symplectica/symplectic.hpp"

namespace symplectica {
namespace {

struct Classification {
  bool symmetric;
  bool hamiltonian;
};

constexpr std::array<Classification, 16> kClassification = {{
    {false, true},                                  // gamma0
    {true, true}, {true, true}, {true, true},       // gamma1..3
    {true, true}, {true, true}, {true, true},       // gamma0 gamma1..3
    {false, true}, {false, true}, {false, true},    // gamma2 gamma3, gamma3 gamma1, gamma1 gamma2
    {false, false},                                 // gamma14 gamma0
    {true, false}, {true, false}, {true, false},    // gamma14 gamma1..3
    {false, false},                                 // gamma14
    {true, false},                                  // identity
}};

// Row a, column b: R_b(tau)^{-1} gamma_a R_b(tau). "." leaves gamma_a
// unchanged, "+x" / "-x" means c gamma_a +- s gamma_x.
constexpr std::array<std::array<const char*, 10>, 10> kConjugation = {{
    {".", "+4", "+5", "+6", "-1", "-2", "-3", ".", ".", "."},
    {"-4", ".", "+9", "-8", "-0", ".", ".", ".", "-3", "+2"},
    {"-5", "-9", ".", "+7", ".", "-0", ".", "+3", ".", "-1"},
    {"-6", "+8", "-7", ".", ".", ".", "-0", "-2", "+1", "."},
    {"+1", "+0", ".", ".", ".", "+9", "-8", ".", "-6", "+5"},
    {"+2", ".", "+0", ".", "-9", ".", "+7", "+6", ".", "-4"},
    {"+3", ".", ".", "+0", "+8", "-7", ".", "-5", "+4", "."},
    {".", ".", "-3", "+2", ".", "-6", "+5", ".", "-9", "+8"},
    {".", "+3", ".", "-1", "+6", ".", "-4", "+9", ".", "-7"},
    {".", "-2", "+1", ".", "-5", "+4", ".", "-8", "+7", "."},
}};

// Generic Hamiltonian matrix for the scalar-product rows.
constexpr std::array<double, 10> kProbe = {0.9, -0.35, 0.6, 0.25, 0.45, -0.2, 0.3, 0.55, -0.4, 0.15};

Matrix4 half_exp(const DiracBasis& basis, int k, double tau) {
  const double half = tau / 2.0;
  if (basis.signature[k] < 0) {
    return std::cos(half) * Matrix4::Identity() + std::sin(half) * basis.gamma[k];
  }
  return std::cosh(half) * Matrix4::Identity() + std::sinh(half) * basis.gamma[k];
}

double symmetric_defect(const Matrix4& m, bool symmetric) {
  return symmetric ? max_abs(m - m.transpose()) : max_abs(m + m.transpose());
}

std::string gamma_name(int k) { return "gamma" + std::to_string(k); }

void classification_cells(const DiracBasis& basis, double tol, SelfTestReport& report) {
  for (int k = 0; k < 16; ++k) {
    const Classification& want = kClassification[k];
    const Matrix4& g = basis.gamma[k];
    const double sym = symmetric_defect(g, want.symmetric);
    const double ham = want.hamiltonian ? hamiltonian_residual(g) : skew_hamiltonian_residual(g);
    const double error = std::max(sym, ham);
    report.cells.push_back({SelfTestTable::kClassification,
                            gamma_name(k) + (want.symmetric ? " symmetric" : " skew") +
                                (want.hamiltonian ? " hamiltonian" : " skew-hamiltonian"),
                            error <= tol, error});
  }
}

void conjugation_cells(const DiracBasis& basis, double tau, double tol, SelfTestReport& report) {
  for (int b = 0; b < 10; ++b) {
    const bool rotation = basis.signature[b] < 0;
    const double c = rotation ? std::cos(tau) : std::cosh(tau);
    const double s = rotation ? std::sin(tau) : std::sinh(tau);
    const Matrix4 r = half_exp(basis, b, tau);
    const Matrix4 r_inv = half_exp(basis, b, -tau);
    for (int a = 0; a < 10; ++a) {
      const std::string cell = kConjugation[a][b];
      Matrix4 expected = basis.gamma[a];
      std::string label = "R" + std::to_string(b) + ": " + gamma_name(a) + " -> ";
      if (cell == ".") {
        label += gamma_name(a);
      } else {
        const double sign = cell[0] == '-' ? -1.0 : 1.0;
        const int x = cell[1] - '0';
        expected = c * basis.gamma[a] + sign * s * basis.gamma[x];
        label += (rotation ? "c " : "C ") + gamma_name(a) + (sign < 0 ? " - " : " + ") +
                 (rotation ? "s " : "S ") + gamma_name(x);
      }
      const double error = max_abs(r_inv * basis.gamma[a] * r - expected);
      report.cells.push_back({rotation ? SelfTestTable::kRotations : SelfTestTable::kBoosts, label,
                              error <= tol, error});
    }
  }
}

void scalar_product_cells(const DiracBasis& basis, double tau, double tol, SelfTestReport& report) {
  Matrix4 h = Matrix4::Zero();
  for (int k = 0; k < 10; ++k) h += kProbe[k] * basis.gamma[k];
  const AuxInvariants before = aux_invariants(h);
  static constexpr std::array<const char*, 3> kColumns = {"eps_r", "eps_g", "eps_b"};
  for (int k = 0; k <= 6; ++k) {
    const Matrix4 moved = half_exp(basis, k, tau) * h * half_exp(basis, k, -tau);
    const AuxInvariants after = aux_invariants(moved);
    const ScalarProducts predicted = transform_table_eps(k, tau, before);
    const std::array<double, 3> got = {after.eps_r, after.eps_g, after.eps_b};
    const std::array<double, 3> want = {predicted.eps_r, predicted.eps_g, predicted.eps_b};
    for (int col = 0; col < 3; ++col) {
      const double error = std::abs(got[col] - want[col]);
      report.cells.push_back({SelfTestTable::kScalarProducts,
                              "R" + std::to_string(k) + ": " + kColumns[col], error <= tol, error});
    }
  }
}

}  // namespace

const char* selftest_table_name(SelfTestTable t) {
  switch (t) {
    case SelfTestTable::kClassification: return "classification";
    case SelfTestTable::kRotations: return "rotations";
    case SelfTestTable::kBoosts: return "boosts";
    case SelfTestTable::kScalarProducts: return "scalar-products";
  }
  return "unknown";
}

int SelfTestReport::count(SelfTestTable t) const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [t](const SelfTestCell& c) { return c.table == t; }));
}

int SelfTestReport::failures() const {
  return static_cast<int>(
      std::count_if(cells.begin(), cells.end(), [](const SelfTestCell& c) { return !c.pass; }));
}

SelfTestReport run_selftest(const DiracBasis& basis, double tau, double tolerance) {
  SelfTestReport report;
  report.tau = tau;
  report.tolerance = tolerance;
  classification_cells(basis, tolerance, report);
  conjugation_cells(basis, tau, tolerance, report);
  scalar_product_cells(basis, tau, tolerance, report);
  return report;
}

}  // namespace symplectica
