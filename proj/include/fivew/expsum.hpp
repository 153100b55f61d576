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

// The exponential sum
//
//   S(a, b, g) = sum_{x in GF(2^n)} (-1)^Tr(a x^(2^2k+1) + b x^(2^k+1) + g x)
//
// evaluated two ways: point-wise by direct enumeration, and for all g at
// once through a length-2^n Walsh-Hadamard transform.

#ifndef FIVEW_EXPSUM_HPP
#define FIVEW_EXPSUM_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fivew/bigint.hpp"
#include "fivew/gf2n.hpp"
#include "fivew/parallel.hpp"

namespace fivew {

struct ParamSet {
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;  // gcd(n, k)
  unsigned s = 0;  // n / d, odd and >= 5
  std::uint32_t q0 = 0;  // 2^d

  // Throws InvalidParams unless 2 <= n <= 24, 1 <= k <= n-1 and n/d is odd
  // and at least 5 (which also excludes k = n/3, 2n/3).
  static ParamSet make(unsigned n, unsigned k);

  // 2^(2k)+1 and 2^k+1 reduced mod 2^n - 1.
  std::uint64_t quad_exponent() const;
  std::uint64_t gold_exponent() const;

  friend bool operator==(const ParamSet&, const ParamSet&) = default;
};

// Exact multiset {value -> multiplicity} of sum values.
using ValueCounts = std::map<std::int64_t, std::uint64_t>;

void merge_counts(ValueCounts& into, const ValueCounts& from);

// In-place unnormalised Walsh-Hadamard transform; size must be a power of 2.
void walsh_hadamard(std::vector<std::int32_t>& data);

// Field plus parameters and lazily built power tables. Copies share the
// tables; all const members are safe to call concurrently.
class SumContext {
 public:
  SumContext(Field field, ParamSet params);

  const Field& field() const { return field_; }
  const ParamSet& params() const { return params_; }

  // Mask m with Tr(g x) = parity(m & x) for every x.
  std::uint32_t functional_mask(Elem g) const;

  // Direct enumeration over all 2^n field elements.
  std::int64_t eval_sum(Elem a, Elem b, Elem g) const;

  // Walsh spectrum of x -> (-1)^Tr(a x^(2^2k+1) + b x^(2^k+1)). Entry u is
  // S(a, b, g) for the g whose functional_mask is u.
  std::vector<std::int32_t> gamma_spectrum(Elem a, Elem b) const;
  // Multiset of gamma_spectrum.
  ValueCounts eval_sum_all_gamma(Elem a, Elem b) const;

  // x^(2^2k+1) and x^(2^k+1) indexed by x. Built on first use.
  const std::vector<Elem>& quad_powers() const;
  const std::vector<Elem>& gold_powers() const;

 private:
  struct PowerTables {
    std::once_flag once;
    std::vector<Elem> quad;
    std::vector<Elem> gold;
  };
  const PowerTables& tables() const;

  Field field_;
  ParamSet params_;
  std::shared_ptr<PowerTables> tables_;
  std::vector<std::uint32_t> basis_masks_;  // functional_mask of x^i
};

// Throws BudgetExceeded when an exhaustive sweep over degree n is not
// permitted by opts.
void check_budget(unsigned n, const ExecOptions& opts, const char* what);

// sum over all (a, b, g) of S^3, by enumeration.
BigInt third_moment(const SumContext& ctx, const ExecOptions& opts = {});
// 2^(n+d) + 2^n - 2^d
BigInt third_moment_closed_form(const ParamSet& p);

// Number of (x, y, z) with x+y+z = 0 and equal sums of (2^k+1)- and
// (2^2k+1)-powers equal to zero, by enumerating (x, y). n <= 16.
std::uint64_t count_m3(const SumContext& ctx, const ExecOptions& opts = {});
std::uint64_t count_m3_closed_form(const ParamSet& p);

}  // namespace fivew

#endif  // FIVEW_EXPSUM_HPP
