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

#include "symplectica/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "symplectica/errors.hpp"

namespace symplectica {

void require_phase_matrix(const Matrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square");
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(ErrorCode::kDimensionOdd,
                std::string(what) + ": dimension " + std::to_string(m.rows()) +
                    " is not a positive even number");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + ": shapes " + std::to_string(a.rows()) + "x" +
                    std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x" +
                    std::to_string(b.cols()) + " differ");
  }
}

Matrix symplectic_unit(Eigen::Index pairs) {
  Matrix j = Matrix::Zero(2 * pairs, 2 * pairs);
  for (Eigen::Index p = 0; p < pairs; ++p) {
    j(2 * p, 2 * p + 1) = 1.0;
    j(2 * p + 1, 2 * p) = -1.0;
  }
  return j;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double off_block_norm(const Matrix& m) {
  double sum = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r / 2 != c / 2) sum += m(r, c) * m(r, c);
    }
  }
  return std::sqrt(sum);
}

double off_block_max(const Matrix& m) {
  double best = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r / 2 != c / 2) best = std::max(best, std::abs(m(r, c)));
    }
  }
  return best;
}

std::array<Eigen::Index, 4> pair_indices(Eigen::Index i, Eigen::Index k) {
  return {2 * i, 2 * i + 1, 2 * k, 2 * k + 1};
}

Matrix4 extract_pairs(const Matrix& m, Eigen::Index i, Eigen::Index k) {
  const auto idx = pair_indices(i, k);
  Matrix4 sub;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) sub(r, c) = m(idx[r], idx[c]);
  }
  return sub;
}

Matrix embed_pairs(const Matrix4& block, Eigen::Index dim, Eigen::Index i, Eigen::Index k) {
  Matrix e = Matrix::Identity(dim, dim);
  const auto idx = pair_indices(i, k);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) e(idx[r], idx[c]) = block(r, c);
  }
  return e;
}

void apply_left(Matrix& m, const Matrix4& block, Eigen::Index i, Eigen::Index k) {
  const auto idx = pair_indices(i, k);
  Eigen::Matrix<double, 4, Eigen::Dynamic> rows(4, m.cols());
  for (int r = 0; r < 4; ++r) rows.row(r) = m.row(idx[r]);
  const Eigen::Matrix<double, 4, Eigen::Dynamic> out = block * rows;
  for (int r = 0; r < 4; ++r) m.row(idx[r]) = out.row(r);
}

void apply_right(Matrix& m, const Matrix4& block, Eigen::Index i, Eigen::Index k) {
  const auto idx = pair_indices(i, k);
  Eigen::Matrix<double, Eigen::Dynamic, 4> cols(m.rows(), 4);
  for (int c = 0; c < 4; ++c) cols.col(c) = m.col(idx[c]);
  const Eigen::Matrix<double, Eigen::Dynamic, 4> out = cols * block;
  for (int c = 0; c < 4; ++c) m.col(idx[c]) = out.col(c);
}

}  // namespace symplectica
