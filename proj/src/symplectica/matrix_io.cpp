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

#include "symplectica/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "symplectica/errors.hpp"

namespace symplectica {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<double> parse_row(std::string_view line, std::size_t line_number) {
  std::vector<double> row;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && is_space(line[pos])) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    std::string_view token = line.substr(pos, end - pos);
    // from_chars rejects a leading '+'.
    if (token.size() > 1 && token.front() == '+') token.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      parse_error(line_number, "invalid number '" + std::string(line.substr(pos, end - pos)) + "'");
    }
    if (!std::isfinite(value)) {
      parse_error(line_number, "non-finite value '" + std::string(token) + "'");
    }
    row.push_back(value);
    pos = end;
  }
  return row;
}

}  // namespace

Matrix parse_matrix_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_number = 0;
  std::size_t first_row_line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;

    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) ++first;
    if (first == line.size() || line[first] == '#') continue;

    std::vector<double> row = parse_row(line, line_number);
    if (rows.empty()) {
      first_row_line = line_number;
    } else if (row.size() != rows.front().size()) {
      parse_error(line_number, "row has " + std::to_string(row.size()) + " entries, line " +
                                   std::to_string(first_row_line) + " has " +
                                   std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_error(line_number, "no matrix rows");

  Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

Matrix parse_matrix(std::string_view text) {
  Matrix m = parse_matrix_rows(text);
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix is " + std::to_string(m.rows()) + "x" +
                                                   std::to_string(m.cols()) + ", expected square");
  }
  require_phase_matrix(m, "parse_matrix");
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::string out;
  char buffer[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out.push_back(' ');
      const auto result =
          std::to_chars(buffer, buffer + sizeof buffer, m(r, c), std::chars_format::general, 17);
      out.append(buffer, result.ptr);
    }
    out.push_back('\n');
  }
  return out;
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading '" + path + "'");
  return parse_matrix(buffer.str());
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot open '" + path + "' for writing");
  out << format_matrix(m);
  out.flush();
  if (!out) throw Error(ErrorCode::kIoError, "error writing '" + path + "'");
}

}  // namespace symplectica
