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

#include "fivew/gf2n.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <set>

#include "fivew/error.hpp"

namespace fivew {

namespace {

// One entry per degree 2..24: a primitive trinomial where one exists,
// otherwise a primitive pentanomial. Re-verified by Field::build.
constexpr std::array<std::uint32_t, 25> kDefaultPolys = {
    0,         0,
    0x7,       // x^2+x+1
    0xB,       // x^3+x+1
    0x13,      // x^4+x+1
    0x25,      // x^5+x^2+1
    0x43,      // x^6+x+1
    0x83,      // x^7+x+1
    0x11D,     // x^8+x^4+x^3+x^2+1
    0x211,     // x^9+x^4+1
    0x409,     // x^10+x^3+1
    0x805,     // x^11+x^2+1
    0x1053,    // x^12+x^6+x^4+x+1
    0x201B,    // x^13+x^4+x^3+x+1
    0x4443,    // x^14+x^10+x^6+x+1
    0x8003,    // x^15+x+1
    0x1100B,   // x^16+x^12+x^3+x+1
    0x20009,   // x^17+x^3+1
    0x40081,   // x^18+x^7+1
    0x80027,   // x^19+x^5+x^2+x+1
    0x100009,  // x^20+x^3+1
    0x200005,  // x^21+x^2+1
    0x400003,  // x^22+x+1
    0x800021,  // x^23+x^5+1
    0x1000087, // x^24+x^7+x^2+x+1
};

int mask_degree(BinaryPoly::Mask m) {
  if (m == 0) {
    return -1;
  }
  const auto hi = static_cast<std::uint64_t>(m >> 64);
  if (hi != 0) {
    return 127 - __builtin_clzll(hi);
  }
  return 63 - __builtin_clzll(static_cast<std::uint64_t>(m));
}

// Multiplication in GF(2)[x]/(x^n + reduce) without the field wrapper.
std::uint32_t ring_mul(std::uint32_t a, std::uint32_t b, unsigned n, std::uint32_t reduce) {
  const std::uint32_t top = std::uint32_t{1} << (n - 1);
  const std::uint32_t mask = (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1) {
      acc ^= a;
    }
    b >>= 1;
    const bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) {
      a ^= reduce;
    }
  }
  return acc;
}

std::uint32_t ring_pow(std::uint32_t a, std::uint64_t e, unsigned n, std::uint32_t reduce) {
  std::uint32_t result = 1;
  while (e != 0) {
    if (e & 1) {
      result = ring_mul(result, a, n, reduce);
    }
    a = ring_mul(a, a, n, reduce);
    e >>= 1;
  }
  return result;
}

void check_degree(unsigned n) {
  if (n < kMinDegree || n > kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "degree " + std::to_string(n) + " outside supported range [2, 24]");
  }
}

}  // namespace

int BinaryPoly::degree() const { return mask_degree(mask_); }

unsigned BinaryPoly::weight() const {
  return static_cast<unsigned>(__builtin_popcountll(static_cast<std::uint64_t>(mask_)) +
                               __builtin_popcountll(static_cast<std::uint64_t>(mask_ >> 64)));
}

BinaryPoly BinaryPoly::from_hex(std::string_view text) {
  std::string_view digits = text;
  if (digits.size() >= 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) {
    digits.remove_prefix(2);
  }
  if (digits.empty() || digits.size() > 32) {
    throw Error(ErrorCode::kInvalidArgument, "malformed hex polynomial '" + std::string(text) + "'");
  }
  Mask m = 0;
  for (char c : digits) {
    const int v = std::isdigit(static_cast<unsigned char>(c)) ? c - '0'
                  : (c >= 'a' && c <= 'f')                    ? c - 'a' + 10
                  : (c >= 'A' && c <= 'F')                    ? c - 'A' + 10
                                                              : -1;
    if (v < 0) {
      throw Error(ErrorCode::kInvalidArgument, "malformed hex polynomial '" + std::string(text) + "'");
    }
    m = (m << 4) | static_cast<Mask>(v);
  }
  return BinaryPoly(m);
}

std::string BinaryPoly::to_hex() const {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  if (mask_ == 0) {
    return "0x0";
  }
  std::string out;
  for (Mask m = mask_; m != 0; m >>= 4) {
    out.push_back(kDigits[static_cast<unsigned>(m & 0xF)]);
  }
  out += "x0";
  std::reverse(out.begin(), out.end());
  return out;
}

std::string BinaryPoly::to_string() const {
  if (mask_ == 0) {
    return "0";
  }
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (!coeff(static_cast<unsigned>(i))) {
      continue;
    }
    if (!out.empty()) {
      out += "+";
    }
    if (i == 0) {
      out += "1";
    } else if (i == 1) {
      out += "x";
    } else {
      out += "x^" + std::to_string(i);
    }
  }
  return out;
}

BinaryPoly operator*(BinaryPoly a, BinaryPoly b) {
  if (a.degree() + b.degree() > 127) {
    throw Error(ErrorCode::kInternal, "binary polynomial product exceeds degree 127");
  }
  BinaryPoly::Mask acc = 0;
  BinaryPoly::Mask x = a.mask_;
  for (BinaryPoly::Mask y = b.mask_; y != 0; y >>= 1) {
    if (y & 1) {
      acc ^= x;
    }
    x <<= 1;
  }
  return BinaryPoly(acc);
}

BinaryPoly operator%(BinaryPoly a, BinaryPoly b) {
  const int db = b.degree();
  if (db < 0) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial reduction by zero");
  }
  BinaryPoly::Mask r = a.mask_;
  for (int dr = mask_degree(r); dr >= db; dr = mask_degree(r)) {
    r ^= b.mask_ << (dr - db);
  }
  return BinaryPoly(r);
}

BinaryPoly gcd(BinaryPoly a, BinaryPoly b) {
  while (!b.is_zero()) {
    BinaryPoly r = a % b;
    a = b;
    b = r;
  }
  return a;
}

bool BinaryPoly::is_irreducible() const {
  const int deg = degree();
  if (deg < 1) {
    return false;
  }
  if (deg > 63) {
    throw Error(ErrorCode::kInternal, "irreducibility test limited to degree 63");
  }
  const BinaryPoly x(2);
  BinaryPoly power = x;  // X^(2^i) mod f
  for (int i = 1; i <= deg / 2; ++i) {
    power = (power * power) % *this;
    if (gcd(*this, power + x).degree() != 0) {
      return false;
    }
  }
  return true;
}

BinaryPoly default_primitive_poly(unsigned n) {
  check_degree(n);
  return BinaryPoly(kDefaultPolys[n]);
}

std::vector<std::uint64_t> prime_factors(std::uint64_t value) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % p == 0) {
      out.push_back(p);
      while (value % p == 0) {
        value /= p;
      }
    }
  }
  if (value > 1) {
    out.push_back(value);
  }
  return out;
}

bool is_primitive(unsigned n, BinaryPoly poly) {
  if (n < 1 || n > 31 || poly.degree() != static_cast<int>(n)) {
    return false;
  }
  const auto reduce = static_cast<std::uint32_t>(poly.mask() & ((BinaryPoly::Mask{1} << n) - 1));
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const std::uint32_t x = (n == 1) ? reduce : 2;
  if (ring_pow(x, order, n, reduce) != 1) {
    return false;
  }
  for (std::uint64_t p : prime_factors(order)) {
    if (ring_pow(x, order / p, n, reduce) == 1) {
      return false;
    }
  }
  return true;
}

Field Field::build(unsigned n, std::optional<BinaryPoly> poly) {
  check_degree(n);
  const BinaryPoly chosen = poly.value_or(default_primitive_poly(n));
  if (chosen.degree() != static_cast<int>(n)) {
    throw Error(ErrorCode::kNonPrimitivePolynomial,
                "polynomial " + chosen.to_hex() + " does not have degree " + std::to_string(n));
  }
  if (!is_primitive(n, chosen)) {
    throw Error(ErrorCode::kNonPrimitivePolynomial,
                "polynomial " + chosen.to_hex() + " (" + chosen.to_string() + ") is not primitive");
  }
  return Field(n, chosen);
}

Field::Field(unsigned n, BinaryPoly poly)
    : n_(n),
      poly_(poly),
      reduce_mask_(static_cast<std::uint32_t>(poly.mask() & ((BinaryPoly::Mask{1} << n) - 1))) {
  if (n_ <= kMaxTableDegree) {
    auto tables = std::make_shared<Tables>();
    const std::uint32_t ord = order();
    tables->log.assign(size(), 0);
    tables->antilog.resize(2 * static_cast<std::size_t>(ord));
    Elem e = 1;
    for (std::uint32_t i = 0; i < ord; ++i) {
      tables->antilog[i] = e;
      tables->antilog[i + ord] = e;
      tables->log[e] = i;
      e = ring_mul(e, 2, n_, reduce_mask_);
    }
    tables_ = std::move(tables);
  }
  // Tr(x^i) straight from the definition.
  for (unsigned i = 0; i < n_; ++i) {
    Elem term = Elem{1} << i;
    Elem sum = 0;
    for (unsigned j = 0; j < n_; ++j) {
      sum ^= term;
      term = ring_mul(term, term, n_, reduce_mask_);
    }
    if (sum != 0 && sum != 1) {
      throw Error(ErrorCode::kInternal, "trace of basis element left GF(2)");
    }
    trace_mask_ |= sum << i;
  }
}

Elem Field::clmul_reduce(Elem a, Elem b) const { return ring_mul(a, b, n_, reduce_mask_); }

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) {
    return 1;
  }
  if (a == 0) {
    return 0;
  }
  if (tables_) {
    const std::uint64_t l = (static_cast<std::uint64_t>(tables_->log[a]) * (e % order())) % order();
    return tables_->antilog[l];
  }
  return ring_pow(a, e % order() == 0 ? order() : e % order(), n_, reduce_mask_);
}

Elem Field::inv(Elem a) const {
  if (a == 0) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  }
  return pow(a, order() - 1);
}

Elem Field::frobenius(Elem a, unsigned times) const {
  times %= n_;
  if (a == 0 || times == 0) {
    return a;
  }
  if (tables_) {
    const std::uint64_t l = (static_cast<std::uint64_t>(tables_->log[a]) << times) % order();
    return tables_->antilog[l];
  }
  for (unsigned i = 0; i < times; ++i) {
    a = clmul_reduce(a, a);
  }
  return a;
}

Elem Field::exp(std::int64_t i) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t r = i % ord;
  if (r < 0) {
    r += ord;
  }
  if (tables_) {
    return tables_->antilog[static_cast<std::size_t>(r)];
  }
  return ring_pow(2, static_cast<std::uint64_t>(r), n_, reduce_mask_);
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) {
    throw Error(ErrorCode::kDivisionByZero, "logarithm of zero");
  }
  if (tables_) {
    return tables_->log[a];
  }
  // Baby-step giant-step over the cyclic group of order 2^n - 1.
  const std::uint32_t ord = order();
  std::uint32_t m = 1;
  while (static_cast<std::uint64_t>(m) * m < ord) {
    ++m;
  }
  std::vector<std::pair<Elem, std::uint32_t>> baby;
  baby.reserve(m);
  Elem e = 1;
  for (std::uint32_t j = 0; j < m; ++j) {
    baby.emplace_back(e, j);
    e = clmul_reduce(e, 2);
  }
  std::sort(baby.begin(), baby.end());
  const Elem giant = inv(pow(2, m));
  Elem gamma = a;
  for (std::uint32_t i = 0; i < m; ++i) {
    auto it = std::lower_bound(baby.begin(), baby.end(), std::make_pair(gamma, std::uint32_t{0}));
    if (it != baby.end() && it->first == gamma) {
      return static_cast<std::uint32_t>((static_cast<std::uint64_t>(i) * m + it->second) % ord);
    }
    gamma = clmul_reduce(gamma, giant);
  }
  throw Error(ErrorCode::kInternal, "discrete logarithm not found");
}

Elem Field::rel_trace(Elem a, unsigned d) const {
  if (d == 0 || n_ % d != 0) {
    throw Error(ErrorCode::kInvalidSubfield,
                std::to_string(d) + " does not divide " + std::to_string(n_));
  }
  Elem sum = 0;
  Elem term = a;
  for (unsigned i = 0; i < n_ / d; ++i) {
    sum ^= term;
    term = frobenius(term, d);
  }
  return sum;
}

std::vector<std::uint32_t> Field::cyclotomic_coset(std::uint64_t t) const {
  const std::uint64_t ord = order();
  std::set<std::uint32_t> coset;
  std::uint64_t v = t % ord;
  for (unsigned i = 0; i < n_; ++i) {
    coset.insert(static_cast<std::uint32_t>(v));
    v = (v * 2) % ord;
  }
  return {coset.begin(), coset.end()};
}

BinaryPoly Field::min_poly(std::int64_t t) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t r = t % ord;
  if (r < 0) {
    r += ord;
  }
  // Coefficients over GF(2^n), lowest degree first.
  std::vector<Elem> coeffs{1};
  for (std::uint32_t j : cyclotomic_coset(static_cast<std::uint64_t>(r))) {
    const Elem root = exp(j);
    std::vector<Elem> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] ^= coeffs[i];
      next[i] ^= mul(coeffs[i], root);
    }
    coeffs = std::move(next);
  }
  BinaryPoly::Mask mask = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] > 1) {
      throw Error(ErrorCode::kInternal, "minimal polynomial coefficient outside GF(2)");
    }
    mask |= static_cast<BinaryPoly::Mask>(coeffs[i]) << i;
  }
  return BinaryPoly(mask);
}

std::string elem_to_hex(Elem a) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%X", a);
  return buf;
}

Elem elem_from_hex(std::string_view text) {
  const BinaryPoly p = BinaryPoly::from_hex(text);
  if (p.degree() >= 32) {
    throw Error(ErrorCode::kInvalidArgument, "field element '" + std::string(text) + "' too wide");
  }
  return static_cast<Elem>(p.mask());
}

}  // namespace fivew
