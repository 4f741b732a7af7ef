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

#include "symplectica/decouple4.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "symplectica/errors.hpp"

namespace symplectica {
namespace {

// Generators used by the steps.
constexpr int kRotate0 = 0;
constexpr int kBoostVector = 2;
constexpr int kBoostBivector = 5;
constexpr int kRotateX = 7;
constexpr int kRotateZ = 9;

// Steering quantities below this (relative to |H|_F^2) are round-off.
constexpr double kNegligible = 8 * std::numeric_limits<double>::epsilon();

// arctan(y / x) folded into (-pi/2, pi/2], defined for x == 0.
double ratio_angle(double y, double x, double zero) {
  if (std::abs(y) <= zero && std::abs(x) <= zero) return 0.0;
  double t = std::atan2(y, x);
  if (t > std::numbers::pi / 2) {
    t -= std::numbers::pi;
  } else if (t <= -std::numbers::pi / 2) {
    t += std::numbers::pi;
  }
  return t;
}

class Stepper {
 public:
  Stepper(const Matrix4& h, Structure structure)
      : h_(h), forward_(Matrix4::Identity()), inverse_(Matrix4::Identity()), structure_(structure) {}

  SteeringInvariants steering() const {
    if (structure_ == Structure::kSkewHamiltonian) return steering_from_skew(h_);
    const AuxInvariants aux = aux_invariants(EMForm::from_coefficients(decompose4(h_)));
    return {aux.eps_r, aux.eps_g, aux.b};
  }

  void apply(int generator, double tau) {
    if (tau == 0.0) return;
    const GeneratorId k(generator);
    const Matrix4 r = generator_matrix(k, tau);
    const Matrix4 r_inv = generator_matrix(k, -tau);
    h_ = r * h_ * r_inv;
    forward_ = r * forward_;
    inverse_ = inverse_ * r_inv;
  }

  // Conjugates by T^-1 where the columns of T are symplectic pairs spanning
  // two H-invariant planes. Valid whenever H^2 is a multiple of the identity.
  void split_invariant_planes() {
    const Matrix4 j = dirac_basis().gamma[0];
    const Matrix4 jh = j * h_;
    Eigen::SelfAdjointEigenSolver<Matrix4> eig(Matrix4((jh + jh.transpose()) / 2));
    Eigen::Index top = 0;
    eig.eigenvalues().cwiseAbs().maxCoeff(&top);
    const Eigen::Vector4d v = eig.eigenvectors().col(top);
    const double q = v.dot(jh * v);
    if (q == 0.0) return;
    Matrix4 t;
    t.col(0) = v / std::sqrt(std::abs(q));
    t.col(1) = std::copysign(1.0, q) * (h_ * v) / std::sqrt(std::abs(q));
    const Eigen::Vector4d a = t.col(0), b = t.col(1);
    Matrix4 rest;
    for (int i = 0; i < 4; ++i) {
      const Eigen::Vector4d x = Eigen::Vector4d::Unit(i);
      rest.col(i) = x - (x.dot(j * b)) * a + (x.dot(j * a)) * b;
    }
    double best = 0.0;
    int bi = 0, bk = 1;
    for (int i = 0; i < 4; ++i) {
      for (int k = i + 1; k < 4; ++k) {
        const double w = std::abs(rest.col(i).dot(j * rest.col(k)));
        if (w > best) {
          best = w;
          bi = i;
          bk = k;
        }
      }
    }
    if (best == 0.0) return;
    const double w = rest.col(bi).dot(j * rest.col(bk));
    t.col(2) = rest.col(bi) / std::sqrt(best);
    t.col(3) = rest.col(bk) * (std::copysign(1.0, w) / std::sqrt(best));
    const Matrix4 t_inv = -j * t.transpose() * j;
    h_ = t_inv * h_ * t;
    forward_ = t_inv * forward_;
    inverse_ = inverse_ * t;
  }

  // One linearized correction: solves the Sylvester equations that cancel
  // the coupling blocks to first order and applies the Cayley transform of
  // that Hamiltonian generator. Kept only if the coupling shrinks.
  bool refine() {
    const Matrix2 a = h_.topLeftCorner<2, 2>(), b = h_.bottomRightCorner<2, 2>();
    const Matrix2 i2 = Matrix2::Identity();
    auto solve = [&](const Matrix2& p, const Matrix2& q, const Matrix2& rhs, Matrix2& out) {
      // p Y - Y q = rhs, column-major vec.
      const Matrix4 op = kronecker(i2, p) - kronecker(q.transpose(), i2);
      Eigen::FullPivLU<Matrix4> lu(op);
      if (!lu.isInvertible()) return false;
      const Eigen::Vector4d y = lu.solve(Eigen::Map<const Eigen::Vector4d>(rhs.data()));
      out = Eigen::Map<const Matrix2>(y.data());
      return out.allFinite();
    };
    Matrix2 y, z;
    if (!solve(a, b, h_.topRightCorner<2, 2>(), y) || !solve(b, a, h_.bottomLeftCorner<2, 2>(), z)) return false;
    Matrix4 x = Matrix4::Zero();
    x.topRightCorner<2, 2>() = y;
    x.bottomLeftCorner<2, 2>() = z;
    x = Matrix4(hamiltonian_part(x));
    if (!(x.norm() < 0.5)) return false;
    const Matrix4 id = Matrix4::Identity();
    const Matrix4 t = (id - x / 2).inverse() * (id + x / 2);
    const Matrix4 t_inv = (id + x / 2).inverse() * (id - x / 2);
    const Matrix4 next = t * h_ * t_inv;
    if (!(off_block_max(next) < off_block_max(h_))) return false;
    h_ = next;
    forward_ = t * forward_;
    inverse_ = inverse_ * t_inv;
    return true;
  }

  const Matrix4& matrix() const { return h_; }
  SymplecticTransform transform() const { return {forward_, inverse_}; }

 private:
  Matrix4 h_;
  Matrix4 forward_;
  Matrix4 inverse_;
  Structure structure_;
};

void run_pass(Stepper& s, Strategy strategy, int pass, double zero) {
  SteeringInvariants v = s.steering();
  if (strategy == Strategy::kBivectorBoost) {
    s.apply(kRotate0, -ratio_angle(v.eps_r, v.eps_g, zero));
  } else {
    s.apply(kRotate0, ratio_angle(v.eps_g, v.eps_r, zero));
  }

  v = s.steering();
  if (v.b.norm() <= zero) {
    const double leftover = strategy == Strategy::kBivectorBoost ? v.eps_g : v.eps_r;
    // Nothing to align. On later passes a leftover scalar product means the
    // boost step can never succeed.
    if (pass > 0 && std::abs(leftover) > zero) {
      throw Error(ErrorCode::kComplexEigenvalues,
                  "decouple4: b vanishes while a scalar product does not; matrix has complex "
                  "eigenvalues");
    }
    return;
  }

  s.apply(kRotateZ, -ratio_angle(v.b.x(), v.b.y(), zero));
  v = s.steering();
  s.apply(kRotateX, ratio_angle(v.b.z(), v.b.y(), zero));
  v = s.steering();

  const double num = strategy == Strategy::kBivectorBoost ? v.eps_g : v.eps_r;
  if (std::abs(num) <= zero) return;
  const double q = num / v.b.y();
  if (!(std::abs(q) < 1.0)) {
    throw Error(ErrorCode::kComplexEigenvalues,
                "decouple4: |scalar product / b_y| = " + std::to_string(std::abs(q)) +
                    " >= 1; matrix has complex eigenvalues");
  }
  if (strategy == Strategy::kBivectorBoost) {
    s.apply(kBoostBivector, -std::atanh(q));
  } else {
    s.apply(kBoostVector, std::atanh(q));
  }
}

}  // namespace

Structure classify_structure(const Matrix& m, double tolerance) {
  require_phase_matrix(m, "classify_structure");
  const double scaled = tolerance * std::max(1.0, max_abs(m));
  if (hamiltonian_residual(m) <= scaled) return Structure::kHamiltonian;
  if (skew_hamiltonian_residual(m) <= scaled) return Structure::kSkewHamiltonian;
  throw Error(ErrorCode::kNotHamiltonian,
              "matrix is neither Hamiltonian nor skew-Hamiltonian (residuals " +
                  std::to_string(hamiltonian_residual(m)) + ", " +
                  std::to_string(skew_hamiltonian_residual(m)) + ")");
}

AuxInvariants aux_invariants(const EMForm& f) {
  AuxInvariants a;
  a.eps_r = f.e.dot(f.b);
  a.eps_g = f.b.dot(f.p);
  a.eps_b = f.e.dot(f.p);
  a.r = f.energy * f.p + f.b.cross(f.e);
  a.g = f.energy * f.e + f.p.cross(f.b);
  a.b = f.energy * f.b + f.e.cross(f.p);
  a.p_sq = f.p.squaredNorm();
  a.e_sq = f.e.squaredNorm();
  return a;
}

AuxInvariants aux_invariants(const Matrix4& h) {
  const double scaled = kStructureTolerance * std::max(1.0, max_abs(h));
  return aux_invariants(em_form(h, scaled));
}

SteeringInvariants steering_from_square(const Matrix4& h) {
  const Matrix4 sq = h * h;
  const auto& g = dirac_basis().gamma;
  auto component = [&](int k) { return g[k].cwiseProduct(sq).sum() / 8.0; };
  return {component(14), component(10), Vector3(component(11), component(12), component(13))};
}

SteeringInvariants steering_from_skew(const Matrix4& c) {
  const DiracCoefficients d = decompose4(c);
  return {d.m[14], d.m[10], Vector3(d.m[11], d.m[12], d.m[13])};
}

ScalarProducts transform_table_eps(int k, double tau, const AuxInvariants& a) {
  if (k < 0 || k > 6) {
    throw Error(ErrorCode::kBadGenerator,
                "transform_table_eps: generator " + std::to_string(k) + " is outside 0..6");
  }
  if (k == 0) {
    const double c = std::cos(tau), s = std::sin(tau);
    const double c2 = std::cos(2 * tau), s2 = std::sin(2 * tau);
    return {a.eps_r * c + a.eps_g * s, a.eps_g * c - a.eps_r * s,
            a.eps_b * c2 + (a.p_sq - a.e_sq) / 2 * s2};
  }
  const double ch = std::cosh(tau), sh = std::sinh(tau);
  if (k <= 3) {
    const int i = k - 1;
    return {a.eps_r * ch - a.b[i] * sh, a.eps_g, a.eps_b * ch - a.r[i] * sh};
  }
  const int i = k - 4;
  return {a.eps_r, a.eps_g * ch + a.b[i] * sh, a.eps_b * ch + a.g[i] * sh};
}

namespace detail {

PassOutcome run_decouple_passes(const Matrix4& h, Structure structure, const Decouple4Options& options) {
  const double scale = h.norm();
  const double zero = kNegligible * std::max(scale * scale, std::numeric_limits<double>::min());
  Stepper stepper(h, structure);

  PassOutcome out;
  double previous = std::numeric_limits<double>::infinity();
  bool split = false;
  int pass = 0;
  for (;; ++pass) {
    const double residual = off_block_max(stepper.matrix());
    if (residual <= options.tolerance * scale) {
      out.converged = true;
      break;
    }
    if (pass >= options.max_passes || (pass >= 2 && residual >= previous)) break;
    previous = residual;
    if (!split && structure == Structure::kHamiltonian) {
      const SteeringInvariants v = stepper.steering();
      if (std::abs(v.eps_r) <= zero && std::abs(v.eps_g) <= zero && v.b.norm() <= zero) {
        // H^2 is scalar: the elementary steps have nothing to steer by.
        stepper.split_invariant_planes();
        split = true;
        continue;
      }
    }
    run_pass(stepper, options.strategy, pass, zero);
  }

  if (!out.converged) {
    for (int k = 0; k < 4 && stepper.refine(); ++k) {
      if (off_block_max(stepper.matrix()) <= options.tolerance * scale) {
        out.converged = true;
        break;
      }
    }
  }

  out.report.transform = stepper.transform();
  out.report.result = stepper.matrix();
  out.report.strategy = options.strategy;
  out.report.passes = pass;
  out.report.residual = off_block_max(stepper.matrix());
  return out;
}

}  // namespace detail

DecoupleReport decouple4(const Matrix4& h, const Decouple4Options& options) {
  return decouple4(h, classify_structure(h), options);
}

DecoupleReport decouple4(const Matrix4& h, Structure structure, const Decouple4Options& options) {
  if (options.max_passes < 1 || !(options.tolerance >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "decouple4: invalid options");
  }
  detail::PassOutcome out = detail::run_decouple_passes(h, structure, options);
  if (!out.converged) {
    throw Error(ErrorCode::kNoConvergence,
                "decouple4: coupling residual " + std::to_string(out.report.residual) +
                    " above tolerance after " + std::to_string(out.report.passes) + " passes");
  }
  return out.report;
}

}  // namespace symplectica
