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

#ifndef FIVEW_ERROR_HPP
#define FIVEW_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fivew {

// Numeric values are shared with the C API (fivew_status).
enum class ErrorCode : int {
  kUnsupportedDegree = 1,
  kNonPrimitivePolynomial = 2,
  kDivisionByZero = 3,
  kInvalidSubfield = 4,
  kInvalidParams = 5,
  kZeroForm = 6,
  kInvalidRank = 7,
  kInexactMultiplicity = 8,
  kDegenerateCode = 9,
  kBudgetExceeded = 10,
  kInvalidArgument = 11,
  kIoError = 12,
  kInternal = 13,
};

const char* error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fivew

#endif  // FIVEW_ERROR_HPP
