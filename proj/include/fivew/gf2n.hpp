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

// Arithmetic in GF(2^n), 2 <= n <= 24, in a polynomial basis.
//
// An element is an n-bit mask: bit i is the coefficient of x^i in the
// canonical representative modulo the defining polynomial. The class of x
// (mask 0b10) is the generator and is verified to be primitive.

#ifndef FIVEW_GF2N_HPP
#define FIVEW_GF2N_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fivew {

using Elem = std::uint32_t;

constexpr unsigned kMinDegree = 2;
constexpr unsigned kMaxDegree = 24;
// Log/antilog tables are built up to this degree.
constexpr unsigned kMaxTableDegree = 20;

// Polynomial over GF(2), bit i = coefficient of X^i. Degree <= 127.
class BinaryPoly {
 public:
  using Mask = unsigned __int128;

  constexpr BinaryPoly() = default;
  constexpr explicit BinaryPoly(Mask mask) : mask_(mask) {}

  // Accepts "0x25", "25" or "0X25".
  static BinaryPoly from_hex(std::string_view text);

  Mask mask() const { return mask_; }
  bool is_zero() const { return mask_ == 0; }
  // -1 for the zero polynomial.
  int degree() const;
  bool coeff(unsigned i) const { return i < 128 && ((mask_ >> i) & 1) != 0; }
  unsigned weight() const;

  std::string to_hex() const;
  // Human form, e.g. "x^5+x^2+1".
  std::string to_string() const;

  friend BinaryPoly operator+(BinaryPoly a, BinaryPoly b) { return BinaryPoly(a.mask_ ^ b.mask_); }
  friend BinaryPoly operator*(BinaryPoly a, BinaryPoly b);
  friend BinaryPoly operator%(BinaryPoly a, BinaryPoly b);
  friend bool operator==(BinaryPoly a, BinaryPoly b) { return a.mask_ == b.mask_; }

  // Ben-Or test: gcd(X^(2^i) - X, f) = 1 for i <= deg/2.
  bool is_irreducible() const;

 private:
  Mask mask_ = 0;
};

BinaryPoly gcd(BinaryPoly a, BinaryPoly b);

// Minimal-weight primitive polynomial for each degree in [2, 24].
BinaryPoly default_primitive_poly(unsigned n);

// Distinct prime divisors in increasing order (trial division).
std::vector<std::uint64_t> prime_factors(std::uint64_t value);

class Field {
 public:
  // Throws UnsupportedDegree or NonPrimitivePolynomial.
  static Field build(unsigned n, std::optional<BinaryPoly> poly = std::nullopt);

  unsigned degree() const { return n_; }
  const BinaryPoly& poly() const { return poly_; }
  // 2^n
  std::uint32_t size() const { return std::uint32_t{1} << n_; }
  // 2^n - 1, the order of the multiplicative group.
  std::uint32_t order() const { return size() - 1; }
  Elem generator() const { return 2; }
  bool has_tables() const { return tables_ != nullptr; }
  bool contains(Elem a) const { return a < size(); }

  static Elem add(Elem a, Elem b) { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) {
      return 0;
    }
    if (tables_) {
      return tables_->antilog[tables_->log[a] + tables_->log[b]];
    }
    return clmul_reduce(a, b);
  }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  // a^(2^times)
  Elem frobenius(Elem a, unsigned times) const;

  // pi^i for any integer exponent (reduced mod 2^n - 1).
  Elem exp(std::int64_t i) const;
  // Discrete log base pi; a must be nonzero.
  std::uint32_t log(Elem a) const;

  // Tr_1^n(a) as 0/1.
  unsigned abs_trace(Elem a) const { return static_cast<unsigned>(__builtin_parity(a & trace_mask_)); }
  // Bit i = Tr(x^i); Tr(a) = parity(a & trace_mask()).
  std::uint32_t trace_mask() const { return trace_mask_; }
  // Tr_d^n(a). Throws InvalidSubfield unless d | n.
  Elem rel_trace(Elem a, unsigned d) const;

  // {t * 2^i mod 2^n - 1}, sorted, no repetition.
  std::vector<std::uint32_t> cyclotomic_coset(std::uint64_t t) const;
  // Minimal polynomial of pi^t over GF(2).
  BinaryPoly min_poly(std::int64_t t) const;

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    // Doubled period so log[a] + log[b] never needs a reduction.
    std::vector<Elem> antilog;
  };

  Field(unsigned n, BinaryPoly poly);
  Elem clmul_reduce(Elem a, Elem b) const;

  unsigned n_ = 0;
  BinaryPoly poly_;
  std::uint32_t reduce_mask_ = 0;  // poly without the x^n term
  std::uint32_t trace_mask_ = 0;
  std::shared_ptr<const Tables> tables_;
};

// Returns the primitivity verdict for the class of x modulo poly without
// throwing; used by field-info style reporting.
bool is_primitive(unsigned n, BinaryPoly poly);

std::string elem_to_hex(Elem a);
// Throws InvalidArgument on malformed text.
Elem elem_from_hex(std::string_view text);

}  // namespace fivew

#endif  // FIVEW_GF2N_HPP
