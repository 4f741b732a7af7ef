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

#ifndef SYMPLECTICA_ERRORS_HPP
#define SYMPLECTICA_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace symplectica {

/// Failure categories raised by the core. The numeric values are the ones
/// surfaced through the C API and used as CLI exit codes.
enum class ErrorCode : int {
  kComplexEigenvalues = 2,
  kNoConvergence = 3,
  kParseError = 4,
  kDimensionOdd = 5,
  kDimensionMismatch = 6,
  kDimensionTooSmall = 7,
  kNotHamiltonian = 8,
  kNotSymplectic = 9,
  kBadGenerator = 10,
  kBadEmbedding = 11,
  kHyperbolicOverflow = 12,
  kHyperbolicBlock = 13,
  kLogBranch = 14,
  kUnstableLattice = 15,
  kInvalidArgument = 16,
  kSelfTestFailure = 17,
  kIoError = 18,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symplectica

#endif  // SYMPLECTICA_ERRORS_HPP
