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

#ifndef SYMPLECTICA_SELFTEST_HPP
#define SYMPLECTICA_SELFTEST_HPP

#include <string>
#include <vector>

#include "symplectica/clifford.hpp"

namespace symplectica {

enum class SelfTestTable {
  kClassification,      // symmetry and Hamiltonian property of each gamma_k
  kRotations,           // conjugation by the rotations R0, R7, R8, R9
  kBoosts,              // conjugation by the boosts R1 .. R6
  kScalarProducts,      // eps_r, eps_g, eps_b after R0 .. R6
};

const char* selftest_table_name(SelfTestTable t);

struct SelfTestCell {
  SelfTestTable table;
  std::string label;
  bool pass = false;
  double error = 0.0;  // max abs deviation
};

struct SelfTestReport {
  std::vector<SelfTestCell> cells;
  double tau = 0.0;
  double tolerance = 0.0;

  int count(SelfTestTable t) const;
  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// Regenerates the reference tables from `basis` and compares every cell.
/// Rotation and boost cells hold R_b(tau)^{-1} gamma_a R_b(tau) for
/// a, b in 0..9, expected to be either gamma_a (commuting pair) or
/// c gamma_a +- s gamma_x. The scalar-product rows are checked on a fixed
/// Hamiltonian matrix.
SelfTestReport run_selftest(const DiracBasis& basis = dirac_basis(), double tau = 0.7,
                            double tolerance = 1e-12);

}  // namespace symplectica

#endif  // SYMPLECTICA_SELFTEST_HPP
