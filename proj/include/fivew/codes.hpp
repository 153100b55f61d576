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

// The binary cyclic code of length 2^n - 1 and dimension 3n whose codewords
// are c_i = Tr(a pi^(i(2^2k+1)) + b pi^(i(2^k+1)) + g pi^i).

#ifndef FIVEW_CODES_HPP
#define FIVEW_CODES_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "fivew/bigint.hpp"
#include "fivew/expsum.hpp"

namespace fivew {

struct Label {
  Elem alpha = 0;
  Elem beta = 0;
  Elem gamma = 0;

  friend bool operator==(const Label&, const Label&) = default;
};

class Codeword {
 public:
  Codeword() = default;
  Codeword(std::uint32_t length, Label label);

  std::uint32_t length() const { return length_; }
  const Label& label() const { return label_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool bit(std::uint32_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  void set(std::uint32_t i, bool v);
  unsigned weight() const;
  // Left rotation: result[i] = this[i + by mod length].
  Codeword rotated(std::uint32_t by) const;

  // Compares coordinates only.
  bool same_bits(const Codeword& other) const { return length_ == other.length_ && words_ == other.words_; }
  friend Codeword operator^(const Codeword& a, const Codeword& b);

 private:
  std::uint32_t length_ = 0;
  Label label_;
  std::vector<std::uint64_t> words_;
};

struct CyclicCodeSpec {
  ParamSet params;
  std::uint32_t length = 0;
  unsigned dimension = 0;
  // Minimal polynomials of pi^-1, pi^-(2^k+1), pi^-(2^2k+1).
  BinaryPoly h1, h2, h3;
  BinaryPoly parity_check;
};

class CyclicCode {
 public:
  // Throws DegenerateCode unless the three cyclotomic cosets have size n and
  // are pairwise disjoint.
  static CyclicCode build(const SumContext& ctx);

  const CyclicCodeSpec& spec() const { return spec_; }
  const SumContext& context() const { return ctx_; }

  Codeword codeword(const Label& label) const;
  // 2^(n-1) - S(a, b, g) / 2.
  std::int64_t weight_of(const Label& label) const;
  // Label of the codeword rotated left by one position.
  Label shift_label(const Label& label) const;
  // c(point) = sum_i c_i point^i over GF(2^n).
  Elem evaluate(const Codeword& word, Elem point) const;

  // Weight enumerator from the exhaustive value distribution.
  std::map<std::int64_t, BigInt> weight_distribution(const ExecOptions& opts = {}) const;
  // Weight enumerator from the Hamming weight of every codeword. n <= 7
  // unless opts.force.
  std::map<std::int64_t, BigInt> direct_weight_distribution(const ExecOptions& opts = {}) const;

 private:
  CyclicCode(SumContext ctx, CyclicCodeSpec spec) : ctx_(std::move(ctx)), spec_(spec) {}

  SumContext ctx_;
  CyclicCodeSpec spec_;
};

}  // namespace fivew

#endif  // FIVEW_CODES_HPP
