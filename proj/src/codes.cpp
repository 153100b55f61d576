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

#include "fivew/codes.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "fivew/distribution.hpp"
#include "fivew/error.hpp"

namespace fivew {

Codeword::Codeword(std::uint32_t length, Label label)
    : length_(length), label_(label), words_((length + 63) / 64, 0) {}

void Codeword::set(std::uint32_t i, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (v) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

unsigned Codeword::weight() const {
  unsigned w = 0;
  for (std::uint64_t word : words_) {
    w += static_cast<unsigned>(__builtin_popcountll(word));
  }
  return w;
}

Codeword Codeword::rotated(std::uint32_t by) const {
  Codeword out(length_, label_);
  if (length_ == 0) {
    return out;
  }
  by %= length_;
  for (std::uint32_t i = 0; i < length_; ++i) {
    const std::uint32_t src = (i + by) % length_;
    out.set(i, bit(src));
  }
  return out;
}

Codeword operator^(const Codeword& a, const Codeword& b) {
  if (a.length_ != b.length_) {
    throw Error(ErrorCode::kInvalidArgument, "codeword lengths differ");
  }
  Codeword out(a.length_, Label{a.label_.alpha ^ b.label_.alpha, a.label_.beta ^ b.label_.beta,
                                a.label_.gamma ^ b.label_.gamma});
  for (std::size_t i = 0; i < out.words_.size(); ++i) {
    out.words_[i] = a.words_[i] ^ b.words_[i];
  }
  return out;
}

CyclicCode CyclicCode::build(const SumContext& ctx) {
  const ParamSet& p = ctx.params();
  const Field& f = ctx.field();
  const std::uint64_t exps[3] = {1, p.gold_exponent(), p.quad_exponent()};
  std::vector<std::uint32_t> cosets[3];
  for (int i = 0; i < 3; ++i) {
    cosets[i] = f.cyclotomic_coset(f.order() - exps[i]);
    if (cosets[i].size() != p.n) {
      throw Error(ErrorCode::kDegenerateCode, "cyclotomic coset of -" + std::to_string(exps[i]) + " has size " +
                                                  std::to_string(cosets[i].size()) + ", expected n = " +
                                                  std::to_string(p.n));
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      std::vector<std::uint32_t> common;
      std::set_intersection(cosets[i].begin(), cosets[i].end(), cosets[j].begin(), cosets[j].end(),
                            std::back_inserter(common));
      if (!common.empty()) {
        throw Error(ErrorCode::kDegenerateCode, "cyclotomic cosets of -" + std::to_string(exps[i]) + " and -" +
                                                    std::to_string(exps[j]) + " coincide");
      }
    }
  }

  CyclicCodeSpec spec;
  spec.params = p;
  spec.length = f.order();
  spec.dimension = 3 * p.n;
  spec.h1 = f.min_poly(-static_cast<std::int64_t>(exps[0]));
  spec.h2 = f.min_poly(-static_cast<std::int64_t>(exps[1]));
  spec.h3 = f.min_poly(-static_cast<std::int64_t>(exps[2]));
  for (const BinaryPoly* h : {&spec.h1, &spec.h2, &spec.h3}) {
    if (h->degree() != static_cast<int>(p.n) || !h->is_irreducible()) {
      throw Error(ErrorCode::kDegenerateCode, "parity-check factor " + h->to_hex() + " is not irreducible of degree n");
    }
  }
  if (spec.h1 == spec.h2 || spec.h1 == spec.h3 || spec.h2 == spec.h3) {
    throw Error(ErrorCode::kDegenerateCode, "parity-check factors are not pairwise distinct");
  }
  spec.parity_check = spec.h1 * spec.h2 * spec.h3;
  if (spec.parity_check.degree() != static_cast<int>(spec.dimension)) {
    throw Error(ErrorCode::kDegenerateCode, "parity-check polynomial has wrong degree");
  }
  return CyclicCode(ctx, spec);
}

Codeword CyclicCode::codeword(const Label& label) const {
  const Field& f = ctx_.field();
  const ParamSet& p = ctx_.params();
  if (!f.contains(label.alpha) || !f.contains(label.beta) || !f.contains(label.gamma)) {
    throw Error(ErrorCode::kInvalidArgument, "label element outside GF(2^n)");
  }
  const Elem step_quad = f.exp(static_cast<std::int64_t>(p.quad_exponent()));
  const Elem step_gold = f.exp(static_cast<std::int64_t>(p.gold_exponent()));
  const Elem step = f.generator();
  Elem quad = 1;
  Elem gold = 1;
  Elem lin = 1;
  Codeword out(spec_.length, label);
  for (std::uint32_t i = 0; i < spec_.length; ++i) {
    const Elem arg = f.mul(label.alpha, quad) ^ f.mul(label.beta, gold) ^ f.mul(label.gamma, lin);
    if (f.abs_trace(arg)) {
      out.set(i, true);
    }
    quad = f.mul(quad, step_quad);
    gold = f.mul(gold, step_gold);
    lin = f.mul(lin, step);
  }
  return out;
}

std::int64_t CyclicCode::weight_of(const Label& label) const {
  const std::int64_t s = ctx_.eval_sum(label.alpha, label.beta, label.gamma);
  return (std::int64_t{1} << (ctx_.params().n - 1)) - s / 2;
}

Label CyclicCode::shift_label(const Label& label) const {
  const Field& f = ctx_.field();
  const ParamSet& p = ctx_.params();
  return Label{f.mul(label.alpha, f.exp(static_cast<std::int64_t>(p.quad_exponent()))),
               f.mul(label.beta, f.exp(static_cast<std::int64_t>(p.gold_exponent()))),
               f.mul(label.gamma, f.generator())};
}

Elem CyclicCode::evaluate(const Codeword& word, Elem point) const {
  const Field& f = ctx_.field();
  Elem acc = 0;
  for (std::uint32_t i = word.length(); i-- > 0;) {
    acc = f.mul(acc, point) ^ (word.bit(i) ? 1u : 0u);
  }
  return acc;
}

std::map<std::int64_t, BigInt> CyclicCode::weight_distribution(const ExecOptions& opts) const {
  return brute_force_distribution(ctx_, opts).weights();
}

std::map<std::int64_t, BigInt> CyclicCode::direct_weight_distribution(const ExecOptions& opts) const {
  const unsigned n = ctx_.params().n;
  ExecOptions local = opts;
  local.max_exhaustive_n = std::min(local.max_exhaustive_n, 7u);
  check_budget(n, local, "direct_weight_distribution");
  const std::uint64_t size = ctx_.field().size();
  using Tally = std::vector<std::uint64_t>;
  const Tally tally = parallel_reduce<Tally>(
      size * size, opts.threads,
      [&](Tally& acc, std::uint64_t i) {
        const auto alpha = static_cast<Elem>(i / size);
        const auto beta = static_cast<Elem>(i % size);
        for (Elem gamma = 0; gamma < size; ++gamma) {
          ++acc[codeword(Label{alpha, beta, gamma}).weight()];
        }
      },
      [](Tally& into, const Tally& from) {
        for (std::size_t j = 0; j < into.size(); ++j) {
          into[j] += from[j];
        }
      },
      Tally(spec_.length + 1, 0));
  std::map<std::int64_t, BigInt> out;
  for (std::size_t w = 0; w < tally.size(); ++w) {
    if (tally[w] != 0) {
      out[static_cast<std::int64_t>(w)] = tally[w];
    }
  }
  return out;
}

}  // namespace fivew
