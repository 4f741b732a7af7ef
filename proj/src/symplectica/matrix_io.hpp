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

#ifndef SYMPLECTICA_MATRIX_IO_HPP
#define SYMPLECTICA_MATRIX_IO_HPP

#include <string>
#include <string_view>

#include "symplectica/matrix.hpp"

namespace symplectica {

/// Plain-text matrix format: one row per line, whitespace-separated decimal
/// literals. Blank lines and lines starting with '#' are ignored.
/// Throws ParseError (with the 1-based line number) on malformed input.
Matrix parse_matrix_rows(std::string_view text);

/// As parse_matrix_rows, but the matrix must be square (DimensionMismatch)
/// and of even dimension (DimensionOdd).
Matrix parse_matrix(std::string_view text);

/// Rows of the matrix, 17 significant digits per entry, so parsing the output
/// reproduces every value exactly.
std::string format_matrix(const Matrix& m);

/// Throws IoError when the file cannot be read or written.
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

}  // namespace symplectica

#endif  // SYMPLECTICA_MATRIX_IO_HPP
