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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fivew/error.hpp"
#include "fivew/gf2n.hpp"
#include "oracles.hpp"

using namespace fivew;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("binary polynomial parsing and printing") {
  const BinaryPoly p = BinaryPoly::from_hex("0x25");
  CHECK(p.degree() == 5);
  CHECK(p.weight() == 3);
  CHECK(p.to_hex() == "0x25");
  CHECK(p.to_string() == "x^5+x^2+1");
  CHECK(BinaryPoly::from_hex("25") == p);
  CHECK(BinaryPoly::from_hex("0X25") == p);
  CHECK(BinaryPoly().degree() == -1);
  CHECK(code_of([] { BinaryPoly::from_hex("0xZZ"); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("polynomial products and remainders agree with the oracle") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t a = rng() & 0xFFFFF;
    const std::uint64_t b = (rng() & 0x3FF) | 1;
    CHECK(static_cast<std::uint64_t>((BinaryPoly(a) * BinaryPoly(b)).mask()) == oracle::poly_mul(a, b));
    CHECK(static_cast<std::uint64_t>((BinaryPoly(a) % BinaryPoly(b)).mask()) == oracle::poly_mod(a, b));
  }
}

TEST_CASE("irreducibility matches trial division for every polynomial up to degree 12") {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    CHECK_MESSAGE(BinaryPoly(p).is_irreducible() == oracle::irreducible(p), "poly " << p);
  }
}

TEST_CASE("default polynomials are primitive and of minimal weight") {
  for (unsigned n = kMinDegree; n <= kMaxDegree; ++n) {
    const BinaryPoly p = default_primitive_poly(n);
    CAPTURE(n);
    CHECK(p.degree() == static_cast<int>(n));
    CHECK(is_primitive(n, p));
    if (n <= 16) {
      const oracle::Gf gf{n, static_cast<std::uint32_t>(p.mask())};
      CHECK(gf.order_of_x() == gf.order());
    }
    // A pentanomial is only used when no primitive trinomial exists.
    if (p.weight() == 5) {
      for (unsigned j = 1; j < n; ++j) {
        const BinaryPoly tri((BinaryPoly::Mask{1} << n) | (BinaryPoly::Mask{1} << j) | 1);
        CHECK_FALSE(is_primitive(n, tri));
      }
    }
  }
}

TEST_CASE("build_field") {
  SUBCASE("x^3+x+1 gives a field in which x has order 7") {
    const Field f = Field::build(3, BinaryPoly(0xB));
    CHECK(f.order() == 7);
    Elem c = 1;
    std::set<Elem> seen;
    for (int i = 1; i <= 7; ++i) {
      c = f.mul(c, 2);
      seen.insert(c);
    }
    CHECK(c == 1);
    CHECK(seen.size() == 7);
  }
  SUBCASE("reducible polynomial is rejected") {
    CHECK(code_of([] { Field::build(3, BinaryPoly(0xF)); }) == ErrorCode::kNonPrimitivePolynomial);
  }
  SUBCASE("irreducible but not primitive is rejected") {
    // x^4+x^3+x^2+x+1 divides x^5 - 1.
    CHECK(oracle::irreducible(0x1F));
    CHECK(code_of([] { Field::build(4, BinaryPoly(0x1F)); }) == ErrorCode::kNonPrimitivePolynomial);
  }
  SUBCASE("wrong degree is rejected") {
    CHECK(code_of([] { Field::build(4, BinaryPoly(0xB)); }) == ErrorCode::kNonPrimitivePolynomial);
  }
  SUBCASE("degree bounds") {
    CHECK(code_of([] { Field::build(1); }) == ErrorCode::kUnsupportedDegree);
    CHECK(code_of([] { Field::build(25); }) == ErrorCode::kUnsupportedDegree);
  }
  SUBCASE("n = 2 default is x^2+x+1") {
    CHECK(Field::build(2).poly() == BinaryPoly(0x7));
  }
}

TEST_CASE("multiplication matches the bit-serial oracle") {
  CHECK(Field::build(3, BinaryPoly(0xB)).mul(2, 4) == 3);
  std::mt19937_64 rng(11);
  for (unsigned n : {2u, 3u, 5u, 8u, 13u, 20u, 21u, 24u}) {
    const Field f = Field::build(n);
    const oracle::Gf gf{n, static_cast<std::uint32_t>(f.poly().mask())};
    CAPTURE(n);
    CHECK(f.has_tables() == (n <= kMaxTableDegree));
    for (int i = 0; i < 2000; ++i) {
      const Elem a = static_cast<Elem>(rng()) & (f.size() - 1);
      const Elem b = static_cast<Elem>(rng()) & (f.size() - 1);
      CHECK(f.mul(a, b) == gf.mul(a, b));
    }
  }
}

TEST_CASE("field axioms, inverse, powers and logs") {
  std::mt19937_64 rng(3);
  for (unsigned n : {4u, 5u, 7u, 9u, 15u, 22u}) {
    const Field f = Field::build(n);
    const Elem mask = f.size() - 1;
    CAPTURE(n);
    for (int i = 0; i < 500; ++i) {
      const Elem a = static_cast<Elem>(rng()) & mask;
      const Elem b = static_cast<Elem>(rng()) & mask;
      const Elem c = static_cast<Elem>(rng()) & mask;
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)));
      CHECK(f.mul(a, 1) == a);
      CHECK(f.mul(a, 0) == 0);
      CHECK(f.sqr(a ^ b) == (f.sqr(a) ^ f.sqr(b)));
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK(f.exp(f.log(a)) == a);
        CHECK(f.pow(a, f.order()) == 1);
      }
      CHECK(f.frobenius(a, n) == a);
      CHECK(f.frobenius(a, 2) == f.sqr(f.sqr(a)));
    }
    CHECK(f.exp(-1) == f.inv(2));
    CHECK(code_of([&] { f.inv(0); }) == ErrorCode::kDivisionByZero);
  }
}

TEST_CASE("absolute trace") {
  CHECK(Field::build(5).abs_trace(0) == 0);
  CHECK(Field::build(5).abs_trace(1) == 1);
  CHECK(Field::build(4).abs_trace(1) == 0);
  for (unsigned n : {3u, 5u, 6u, 8u, 11u}) {
    const Field f = Field::build(n);
    const oracle::Gf gf{n, static_cast<std::uint32_t>(f.poly().mask())};
    unsigned ones = 0;
    for (Elem a = 0; a < f.size(); ++a) {
      CHECK(f.abs_trace(a) == gf.trace(a));
      ones += f.abs_trace(a);
    }
    // Balanced: half of the field has trace one.
    CHECK(ones == f.size() / 2);
  }
}

TEST_CASE("relative trace") {
  const Field f6 = Field::build(6);
  for (Elem a = 0; a < f6.size(); ++a) {
    CHECK(f6.rel_trace(a, 3) == (a ^ f6.pow(a, 8)));
    CHECK(f6.rel_trace(a, 6) == a);
    CHECK(f6.rel_trace(a, 1) == f6.abs_trace(a));
    // The image lies in GF(2^3): fixed by x -> x^8.
    CHECK(f6.pow(f6.rel_trace(a, 3), 8) == f6.rel_trace(a, 3));
  }
  CHECK(f6.rel_trace(0, 2) == 0);
  CHECK(code_of([&] { f6.rel_trace(1, 4); }) == ErrorCode::kInvalidSubfield);
}

TEST_CASE("cyclotomic cosets") {
  CHECK(Field::build(5).cyclotomic_coset(0) == std::vector<std::uint32_t>{0});
  CHECK(Field::build(5).cyclotomic_coset(1) == std::vector<std::uint32_t>{1, 2, 4, 8, 16});
  CHECK(Field::build(4).cyclotomic_coset(5) == std::vector<std::uint32_t>{5, 10});
}

TEST_CASE("minimal polynomials") {
  CHECK(Field::build(5).min_poly(0) == BinaryPoly(0x3));
  CHECK(Field::build(3, BinaryPoly(0xB)).min_poly(1) == BinaryPoly(0xB));
  for (unsigned n : {5u, 7u, 8u}) {
    const Field f = Field::build(n);
    for (std::int64_t t : {-1, 3, 5, -5, 17}) {
      const BinaryPoly m = f.min_poly(t);
      CAPTURE(n);
      CAPTURE(t);
      CHECK(oracle::irreducible(static_cast<std::uint64_t>(m.mask())));
      CHECK(m.degree() == static_cast<int>(f.cyclotomic_coset(((t % f.order()) + f.order()) % f.order()).size()));
      // Horner evaluation at pi^t.
      const Elem root = f.exp(t);
      Elem acc = 0;
      for (int i = m.degree(); i >= 0; --i) {
        acc = f.mul(acc, root) ^ (m.coeff(static_cast<unsigned>(i)) ? 1 : 0);
      }
      CHECK(acc == 0);
    }
  }
}

TEST_CASE("hex element helpers") {
  CHECK(elem_to_hex(0x1F) == "0x1F");
  CHECK(elem_from_hex("0x1f") == 0x1F);
  CHECK(elem_from_hex("3") == 3);
}
