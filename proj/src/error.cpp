// Copyright 2026 The fivew Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fivew/error.hpp"

namespace fivew {

const char* error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kNonPrimitivePolynomial: return "NonPrimitivePolynomial";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kInvalidSubfield: return "InvalidSubfield";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kZeroForm: return "ZeroFormError";
    case ErrorCode::kInvalidRank: return "InvalidRank";
    case ErrorCode::kInexactMultiplicity: return "InexactMultiplicity";
    case ErrorCode::kDegenerateCode: return "DegenerateCode";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kInternal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace fivew
