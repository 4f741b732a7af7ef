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

#include "symplectica/jacobi.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <optional>
#include <string>
#include <tuple>

#include "symplectica/errors.hpp"

namespace symplectica {
namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

struct Candidate {
  double weight;
  Eigen::Index i;
  Eigen::Index k;
};

double coupling_weight(const Matrix& h, Eigen::Index i, Eigen::Index k) {
  return h.block(2 * i, 2 * k, 2, 2).squaredNorm() + h.block(2 * k, 2 * i, 2, 2).squaredNorm();
}

// All coupled pairs, strongest first.
std::vector<Candidate> ranked_pairs(const Matrix& h) {
  std::vector<Candidate> out;
  const Eigen::Index n = pair_count(h);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const double w = coupling_weight(h, i, k);
      if (w > 0.0) out.push_back({w, i, k});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) { return a.weight > b.weight; });
  return out;
}

}  // namespace

double relative_off_block_residual(const Matrix& h) {
  const double total = h.norm();
  return total == 0.0 ? 0.0 : off_block_norm(h) / total;
}

std::pair<Eigen::Index, Eigen::Index> select_dominant_block(const Matrix& h) {
  require_phase_matrix(h, "select_dominant_block");
  const Eigen::Index n = pair_count(h);
  if (n < 2) {
    throw Error(ErrorCode::kDimensionTooSmall, "select_dominant_block: need at least two pairs");
  }
  std::pair<Eigen::Index, Eigen::Index> best{0, 1};
  double best_weight = -1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      const double w = coupling_weight(h, i, k);
      if (w > best_weight) {
        best_weight = w;
        best = {i, k};
      }
    }
  }
  return best;
}

JacobiReport jacobi_decouple(const Matrix& h, const JacobiConfig& config) {
  require_phase_matrix(h, "jacobi_decouple");
  if (!(config.tolerance > 0.0) || config.max_sweeps < 0) {
    throw Error(ErrorCode::kInvalidArgument, "jacobi_decouple: invalid configuration");
  }
  const Eigen::Index dim = h.rows();
  const Eigen::Index n = dim / 2;

  JacobiReport report;
  report.structure = classify_structure(h);
  report.transform = SymplecticTransform::identity(dim);
  report.result = h;
  report.residual_history.push_back(relative_off_block_residual(h));
  if (n < 2) return report;

  const long max_steps = config.max_sweeps > 0 ? config.max_sweeps : 64L * n * n;
  Decouple4Options inner;
  inner.strategy = config.strategy;
  inner.tolerance = 0.0;  // run each sub-problem to its round-off floor

  Matrix& cur = report.result;
  std::vector<double>& history = report.residual_history;
  while (history.back() >= config.tolerance) {
    if (report.steps >= max_steps) {
      throw Error(ErrorCode::kNoConvergence,
                  "jacobi_decouple: residual " + format_double(history.back()) + " after " +
                      std::to_string(report.steps) + " steps");
    }

    // Dominant pair first; a weaker pair is used only when the dominant
    // step would break the factor-2 growth guard.
    const double last = history.back();
    std::optional<Matrix> best;
    std::optional<DecoupleReport> best_step;
    Eigen::Index bi = 0, bk = 0;
    double best_r = std::numeric_limits<double>::infinity();
    std::optional<Error> first_failure;
    bool any = false;
    for (const Candidate& c : ranked_pairs(cur)) {
      std::optional<DecoupleReport> step;
      try {
        step = detail::run_decouple_passes(extract_pairs(cur, c.i, c.k), report.structure, inner).report;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kComplexEigenvalues && e.code() != ErrorCode::kHyperbolicOverflow) throw;
        if (!first_failure) first_failure = e;
        ++report.skipped_pairs;
        continue;
      }
      any = true;
      Matrix trial = cur;
      apply_left(trial, step->transform.forward, c.i, c.k);
      apply_right(trial, step->transform.inverse, c.i, c.k);
      const double r = relative_off_block_residual(trial);
      if (r < best_r) {
        best_r = r;
        best = std::move(trial);
        best_step = step;
        bi = c.i;
        bk = c.k;
      }
      if (r <= 2.0 * last) break;
    }
    if (!any) {
      if (first_failure) throw Error(ErrorCode::kComplexEigenvalues, first_failure->what());
      throw Error(ErrorCode::kNoConvergence, "jacobi_decouple: no coupled pair left to treat");
    }

    cur = std::move(*best);
    apply_left(report.transform.forward, best_step->transform.forward, bi, bk);
    apply_right(report.transform.inverse, best_step->transform.inverse, bi, bk);
    ++report.steps;

    const double r = best_r;
    history.push_back(r);
    if (r < config.tolerance) break;
    if (r > 2.0 * last) {
      throw Error(ErrorCode::kNoConvergence, "jacobi_decouple: residual jumped from " +
                                                 format_double(last) + " to " + format_double(r));
    }
    // A plateau may last about one sweep over the pairs.
    const size_t window = std::max<size_t>(10, static_cast<size_t>(n * (n - 1) / 2));
    if (history.size() > window && !(r < history[history.size() - 1 - window])) {
      throw Error(ErrorCode::kNoConvergence, "jacobi_decouple: residual stalled at " + format_double(r) +
                                                 " over " + std::to_string(window) + " steps");
    }
  }
  return report;
}

}  // namespace symplectica
