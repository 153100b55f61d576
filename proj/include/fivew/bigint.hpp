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

#ifndef FIVEW_BIGINT_HPP
#define FIVEW_BIGINT_HPP

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace fivew {

// Multiplicities reach ~2^72 at n = 24 and third moments ~2^121.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace fivew

#endif  // FIVEW_BIGINT_HPP
