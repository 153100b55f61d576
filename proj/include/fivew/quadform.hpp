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

// Rank of the quadratic form x -> Tr_d^n(a x^(2^2k+1) + b x^(2^k+1)) over
// GF(2^d), obtained from the kernel of the linearized polynomial
//
//   phi(x) = a^(2^2k) x^(2^4k) + b^(2^2k) x^(2^3k) + b^(2^k) x^(2^k) + a x,
//
// which is the radical of the associated bilinear form. The rank fixes the
// distribution of S(a, b, g) over g.

#ifndef FIVEW_QUADFORM_HPP
#define FIVEW_QUADFORM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fivew/expsum.hpp"

namespace fivew {

struct RankResult {
  unsigned kernel_dim_m = 0;  // over GF(2^d)
  unsigned rank_r = 0;        // s - kernel_dim_m

  friend bool operator==(const RankResult&, const RankResult&) = default;
};

struct GammaDistribution {
  std::uint64_t count_zero = 0;
  std::uint64_t count_plus = 0;
  std::uint64_t count_minus = 0;
  std::int64_t magnitude = 0;

  friend bool operator==(const GammaDistribution&, const GammaDistribution&) = default;
};

// Dimension over GF(2) of the null space of the linear map whose images of
// the unit vectors e_0..e_{ncols-1} are the given column masks.
unsigned gf2_nullity(std::span<const std::uint32_t> columns);

// 2^(n - d r / 2). Throws InvalidRank unless r is even with 0 < r <= s.
std::int64_t value_magnitude(const ParamSet& p, unsigned rank);

// Signed value counts over all 2^n choices of g for a form of rank r.
GammaDistribution gamma_distribution_for_rank(const ParamSet& p, unsigned rank);

// Compares a GammaDistribution with an observed {value -> count} multiset.
bool matches(const GammaDistribution& predicted, const ValueCounts& observed);

class QuadForm {
 public:
  explicit QuadForm(const SumContext& ctx);

  const SumContext& context() const { return ctx_; }

  Elem phi(Elem a, Elem b, Elem x) const;
  // Throws ZeroFormError for (a, b) = (0, 0).
  RankResult kernel_dim(Elem a, Elem b) const;
  // GF(2) basis of {x : phi(x) = 0}.
  std::vector<Elem> kernel_basis(Elem a, Elem b) const;
  GammaDistribution predict_gamma_distribution(Elem a, Elem b) const;

 private:
  // Column masks phi(e_i) for the current (a, b).
  void columns(Elem a, Elem b, std::span<std::uint32_t> out) const;

  SumContext ctx_;
  // (e_i)^(2^jk) for j = 1, 3, 4.
  std::vector<Elem> frob_k_, frob_3k_, frob_4k_;
};

}  // namespace fivew

#endif  // FIVEW_QUADFORM_HPP
