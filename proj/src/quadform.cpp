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

#include "fivew/quadform.hpp"

#include <array>
#include <string>

#include "fivew/error.hpp"

namespace fivew {

namespace {

// Reduces columns to an echelon basis keyed by leading bit. Each column
// that reduces to zero contributes one kernel vector, recorded in
// `kernel` as the combination of unit vectors that produced it.
unsigned eliminate(std::span<const std::uint32_t> columns, std::vector<std::uint32_t>* kernel) {
  std::array<std::uint32_t, 32> pivot_value{};
  std::array<std::uint32_t, 32> pivot_combo{};
  unsigned nullity = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    std::uint32_t value = columns[i];
    std::uint32_t combo = std::uint32_t{1} << i;
    while (value != 0) {
      const int lead = 31 - __builtin_clz(value);
      if (pivot_value[lead] == 0) {
        pivot_value[lead] = value;
        pivot_combo[lead] = combo;
        break;
      }
      value ^= pivot_value[lead];
      combo ^= pivot_combo[lead];
    }
    if (value == 0) {
      ++nullity;
      if (kernel) {
        kernel->push_back(combo);
      }
    }
  }
  return nullity;
}

}  // namespace

unsigned gf2_nullity(std::span<const std::uint32_t> columns) {
  if (columns.size() > 32) {
    throw Error(ErrorCode::kInvalidArgument, "at most 32 columns");
  }
  return eliminate(columns, nullptr);
}

std::int64_t value_magnitude(const ParamSet& p, unsigned rank) {
  if (rank % 2 != 0 || rank == 0 || rank > p.s) {
    throw Error(ErrorCode::kInvalidRank, "rank " + std::to_string(rank) + " must be even and in (0, s]");
  }
  return std::int64_t{1} << (p.n - p.d * rank / 2);
}

GammaDistribution gamma_distribution_for_rank(const ParamSet& p, unsigned rank) {
  GammaDistribution g;
  g.magnitude = value_magnitude(p, rank);
  const std::uint64_t q0_s = std::uint64_t{1} << p.n;
  const std::uint64_t q0_r = std::uint64_t{1} << (p.d * rank);
  const std::uint64_t q0_half = std::uint64_t{1} << (p.d * rank / 2);
  g.count_zero = q0_s - q0_r;
  g.count_plus = (q0_r + q0_half) / 2;
  g.count_minus = (q0_r - q0_half) / 2;
  return g;
}

bool matches(const GammaDistribution& predicted, const ValueCounts& observed) {
  ValueCounts expected;
  if (predicted.count_zero) expected[0] = predicted.count_zero;
  if (predicted.count_plus) expected[predicted.magnitude] = predicted.count_plus;
  if (predicted.count_minus) expected[-predicted.magnitude] = predicted.count_minus;
  return expected == observed;
}

QuadForm::QuadForm(const SumContext& ctx) : ctx_(ctx) {
  const Field& f = ctx_.field();
  const unsigned n = f.degree();
  const unsigned k = ctx_.params().k;
  frob_k_.resize(n);
  frob_3k_.resize(n);
  frob_4k_.resize(n);
  for (unsigned i = 0; i < n; ++i) {
    const Elem e = Elem{1} << i;
    frob_k_[i] = f.frobenius(e, k);
    frob_3k_[i] = f.frobenius(e, 3 * k);
    frob_4k_[i] = f.frobenius(e, 4 * k);
  }
}

Elem QuadForm::phi(Elem a, Elem b, Elem x) const {
  const Field& f = ctx_.field();
  const unsigned k = ctx_.params().k;
  return f.mul(f.frobenius(a, 2 * k), f.frobenius(x, 4 * k)) ^
         f.mul(f.frobenius(b, 2 * k), f.frobenius(x, 3 * k)) ^
         f.mul(f.frobenius(b, k), f.frobenius(x, k)) ^ f.mul(a, x);
}

void QuadForm::columns(Elem a, Elem b, std::span<std::uint32_t> out) const {
  const Field& f = ctx_.field();
  const unsigned k = ctx_.params().k;
  const Elem a2k = f.frobenius(a, 2 * k);
  const Elem b2k = f.frobenius(b, 2 * k);
  const Elem bk = f.frobenius(b, k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.mul(a2k, frob_4k_[i]) ^ f.mul(b2k, frob_3k_[i]) ^ f.mul(bk, frob_k_[i]) ^
             f.mul(a, Elem{1} << i);
  }
}

RankResult QuadForm::kernel_dim(Elem a, Elem b) const {
  if (a == 0 && b == 0) {
    throw Error(ErrorCode::kZeroForm, "(alpha, beta) = (0, 0) has no quadratic part");
  }
  const ParamSet& p = ctx_.params();
  std::array<std::uint32_t, 32> cols{};
  columns(a, b, std::span(cols.data(), p.n));
  const unsigned nullity = gf2_nullity(std::span<const std::uint32_t>(cols.data(), p.n));
  if (nullity % p.d != 0) {
    throw Error(ErrorCode::kInternal, "kernel dimension " + std::to_string(nullity) +
                                          " is not a multiple of d = " + std::to_string(p.d));
  }
  RankResult r;
  r.kernel_dim_m = nullity / p.d;
  r.rank_r = p.s - r.kernel_dim_m;
  return r;
}

std::vector<Elem> QuadForm::kernel_basis(Elem a, Elem b) const {
  const unsigned n = ctx_.params().n;
  std::array<std::uint32_t, 32> cols{};
  columns(a, b, std::span(cols.data(), n));
  std::vector<std::uint32_t> kernel;
  eliminate(std::span<const std::uint32_t>(cols.data(), n), &kernel);
  return {kernel.begin(), kernel.end()};
}

GammaDistribution QuadForm::predict_gamma_distribution(Elem a, Elem b) const {
  return gamma_distribution_for_rank(ctx_.params(), kernel_dim(a, b).rank_r);
}

}  // namespace fivew
