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

#include "fivew/expsum.hpp"

#include <numeric>
#include <string>

#include "fivew/error.hpp"

namespace fivew {

ParamSet ParamSet::make(unsigned n, unsigned k) {
  const std::string tag = "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(ErrorCode::kInvalidParams, tag + ": n must lie in [2, 24]");
  }
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidParams, tag + ": k must lie in [1, n-1]");
  }
  ParamSet p;
  p.n = n;
  p.k = k;
  p.d = std::gcd(n, k);
  p.s = n / p.d;
  p.q0 = std::uint32_t{1} << p.d;
  if (p.s % 2 == 0) {
    throw Error(ErrorCode::kInvalidParams, tag + ": n/gcd(n,k) must be odd");
  }
  if (p.s == 3) {
    throw Error(ErrorCode::kInvalidParams, tag + ": k = n/3 and k = 2n/3 are excluded");
  }
  return p;
}

std::uint64_t ParamSet::quad_exponent() const {
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  return ((std::uint64_t{1} << ((2 * k) % n)) + 1) % ord;
}

std::uint64_t ParamSet::gold_exponent() const {
  const std::uint64_t ord = (std::uint64_t{1} << n) - 1;
  return ((std::uint64_t{1} << k) + 1) % ord;
}

void merge_counts(ValueCounts& into, const ValueCounts& from) {
  for (const auto& [value, count] : from) {
    into[value] += count;
  }
}

void walsh_hadamard(std::vector<std::int32_t>& data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      std::int32_t* lo = data.data() + block;
      std::int32_t* hi = lo + half;
      for (std::size_t i = 0; i < half; ++i) {
        const std::int32_t u = lo[i];
        const std::int32_t v = hi[i];
        lo[i] = u + v;
        hi[i] = u - v;
      }
    }
  }
}

SumContext::SumContext(Field field, ParamSet params)
    : field_(std::move(field)), params_(params), tables_(std::make_shared<PowerTables>()) {
  if (field_.degree() != params_.n) {
    throw Error(ErrorCode::kInvalidParams, "field degree does not match n");
  }
  basis_masks_.resize(params_.n);
  for (unsigned i = 0; i < params_.n; ++i) {
    const Elem basis = Elem{1} << i;
    std::uint32_t mask = 0;
    for (unsigned j = 0; j < params_.n; ++j) {
      mask |= static_cast<std::uint32_t>(field_.abs_trace(field_.mul(basis, Elem{1} << j))) << j;
    }
    basis_masks_[i] = mask;
  }
}

std::uint32_t SumContext::functional_mask(Elem g) const {
  std::uint32_t mask = 0;
  for (unsigned i = 0; g != 0; ++i, g >>= 1) {
    if (g & 1) {
      mask ^= basis_masks_[i];
    }
  }
  return mask;
}

const SumContext::PowerTables& SumContext::tables() const {
  std::call_once(tables_->once, [this] {
    const std::uint32_t size = field_.size();
    const std::uint64_t quad = params_.quad_exponent();
    const std::uint64_t gold = params_.gold_exponent();
    tables_->quad.resize(size);
    tables_->gold.resize(size);
    tables_->quad[0] = 0;
    tables_->gold[0] = 0;
    for (std::uint32_t x = 1; x < size; ++x) {
      tables_->quad[x] = field_.pow(x, quad);
      tables_->gold[x] = field_.pow(x, gold);
    }
  });
  return *tables_;
}

const std::vector<Elem>& SumContext::quad_powers() const { return tables().quad; }
const std::vector<Elem>& SumContext::gold_powers() const { return tables().gold; }

std::int64_t SumContext::eval_sum(Elem a, Elem b, Elem g) const {
  const Field& f = field_;
  if (!f.contains(a) || !f.contains(b) || !f.contains(g)) {
    throw Error(ErrorCode::kInvalidArgument, "element outside GF(2^n)");
  }
  const unsigned k = params_.k;
  std::int64_t sum = 0;
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const Elem quad = f.mul(f.frobenius(x, 2 * k), x);
    const Elem gold = f.mul(f.frobenius(x, k), x);
    const Elem arg = f.mul(a, quad) ^ f.mul(b, gold) ^ f.mul(g, x);
    sum += f.abs_trace(arg) ? -1 : 1;
  }
  return sum;
}

std::vector<std::int32_t> SumContext::gamma_spectrum(Elem a, Elem b) const {
  if (!field_.contains(a) || !field_.contains(b)) {
    throw Error(ErrorCode::kInvalidArgument, "element outside GF(2^n)");
  }
  const auto& t = tables();
  const std::uint32_t ma = functional_mask(a);
  const std::uint32_t mb = functional_mask(b);
  std::vector<std::int32_t> data(field_.size());
  for (std::uint32_t x = 0; x < field_.size(); ++x) {
    const int bit = __builtin_parity(ma & t.quad[x]) ^ __builtin_parity(mb & t.gold[x]);
    data[x] = 1 - 2 * bit;
  }
  walsh_hadamard(data);
  return data;
}

ValueCounts SumContext::eval_sum_all_gamma(Elem a, Elem b) const {
  ValueCounts counts;
  for (std::int32_t v : gamma_spectrum(a, b)) {
    ++counts[v];
  }
  return counts;
}

void check_budget(unsigned n, const ExecOptions& opts, const char* what) {
  if (n > opts.max_exhaustive_n && !opts.force) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::string(what) + ": exhaustive sweep at n=" + std::to_string(n) +
                    " exceeds the n <= " + std::to_string(opts.max_exhaustive_n) +
                    " budget (use force to override)");
  }
}

BigInt third_moment(const SumContext& ctx, const ExecOptions& opts) {
  const unsigned n = ctx.params().n;
  check_budget(n, opts, "third_moment");
  const std::uint64_t size = ctx.field().size();
  ctx.quad_powers();
  auto total = parallel_reduce<__int128>(
      size * size, opts.threads,
      [&](__int128& acc, std::uint64_t i) {
        const auto spectrum = ctx.gamma_spectrum(static_cast<Elem>(i / size), static_cast<Elem>(i % size));
        for (std::int64_t v : spectrum) {
          acc += static_cast<__int128>(v * v * v);
        }
      },
      [](__int128& into, const __int128& from) { into += from; });
  return BigInt(total);
}

BigInt third_moment_closed_form(const ParamSet& p) {
  return (pow2(p.n + p.d) + pow2(p.n) - pow2(p.d)) * pow2(3 * p.n);
}

std::uint64_t count_m3(const SumContext& ctx, const ExecOptions& opts) {
  const unsigned n = ctx.params().n;
  if (n > 16) {
    throw Error(ErrorCode::kBudgetExceeded, "count_m3 supports n <= 16");
  }
  const auto& quad = ctx.quad_powers();
  const auto& gold = ctx.gold_powers();
  const std::uint32_t size = ctx.field().size();
  return parallel_reduce<std::uint64_t>(
      size, opts.threads,
      [&](std::uint64_t& acc, std::uint64_t xi) {
        const auto x = static_cast<Elem>(xi);
        for (Elem y = 0; y < size; ++y) {
          const Elem z = x ^ y;
          if ((gold[x] ^ gold[y] ^ gold[z]) == 0 && (quad[x] ^ quad[y] ^ quad[z]) == 0) {
            ++acc;
          }
        }
      },
      [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
}

std::uint64_t count_m3_closed_form(const ParamSet& p) {
  return (std::uint64_t{1} << (p.n + p.d)) + (std::uint64_t{1} << p.n) - (std::uint64_t{1} << p.d);
}

}  // namespace fivew
