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

#include "symplectica/errors.hpp"

namespace symplectica {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kComplexEigenvalues: return "ComplexEigenvalues";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionOdd: return "DimensionOdd";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::kNotHamiltonian: return "NotHamiltonian";
    case ErrorCode::kNotSymplectic: return "NotSymplectic";
    case ErrorCode::kBadGenerator: return "BadGenerator";
    case ErrorCode::kBadEmbedding: return "BadEmbedding";
    case ErrorCode::kHyperbolicOverflow: return "HyperbolicOverflow";
    case ErrorCode::kHyperbolicBlock: return "HyperbolicBlock";
    case ErrorCode::kLogBranch: return "LogBranch";
    case ErrorCode::kUnstableLattice: return "UnstableLattice";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSelfTestFailure: return "SelfTestFailure";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace symplectica
