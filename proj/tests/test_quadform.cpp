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

#include "fivew/error.hpp"
#include "fivew/quadform.hpp"
#include "oracles.hpp"

using namespace fivew;

namespace {

SumContext make_ctx(unsigned n, unsigned k) { return SumContext(Field::build(n), ParamSet::make(n, k)); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("gf2 nullity") {
  const std::uint32_t identity[3] = {1, 2, 4};
  CHECK(gf2_nullity(identity) == 0);
  const std::uint32_t dependent[3] = {3, 5, 6};
  CHECK(gf2_nullity(dependent) == 1);
  const std::uint32_t zeros[4] = {0, 0, 0, 0};
  CHECK(gf2_nullity(zeros) == 4);
}

TEST_CASE("phi") {
  const SumContext ctx = make_ctx(5, 1);
  const QuadForm form(ctx);
  const Field& f = ctx.field();
  CHECK(form.phi(3, 7, 0) == 0);
  for (Elem x = 0; x < 32; ++x) {
    CHECK(form.phi(1, 0, x) == (f.pow(x, 16) ^ x));
    CHECK(form.phi(1, 1, x) == (f.pow(x, 16) ^ f.pow(x, 8) ^ f.pow(x, 2) ^ x));
  }
  const oracle::SumOracle orc(5, 1, 0x25);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Elem a = static_cast<Elem>(rng()) & 31;
    const Elem b = static_cast<Elem>(rng()) & 31;
    const Elem x = static_cast<Elem>(rng()) & 31;
    CHECK(form.phi(a, b, x) == orc.phi(a, b, x));
  }
}

TEST_CASE("value magnitude and per-rank gamma counts") {
  const ParamSet p5 = ParamSet::make(5, 1);
  CHECK(value_magnitude(p5, 4) == 8);
  CHECK(value_magnitude(p5, 2) == 16);
  CHECK(value_magnitude(ParamSet::make(15, 3), 4) == 512);
  CHECK(value_magnitude(ParamSet::make(15, 3), 2) == 4096);
  CHECK(gamma_distribution_for_rank(p5, 4) == GammaDistribution{16, 10, 6, 8});
  // Values 0, +-16 with sum 2^5 and square sum 2^10 over all gamma force
  // 3 plus, 1 minus and 28 zeroes.
  CHECK(gamma_distribution_for_rank(p5, 2) == GammaDistribution{28, 3, 1, 16});
  CHECK(code_of([&] { value_magnitude(p5, 3); }) == ErrorCode::kInvalidRank);
  CHECK(code_of([&] { value_magnitude(p5, 0); }) == ErrorCode::kInvalidRank);
  CHECK(code_of([&] { value_magnitude(p5, 6); }) == ErrorCode::kInvalidRank);
  for (unsigned r : {2u, 4u}) {
    const auto g = gamma_distribution_for_rank(p5, r);
    CHECK(g.count_zero + g.count_plus + g.count_minus == 32);
  }
}

TEST_CASE("kernel dimension matches root counting") {
  for (auto [n, k] : {std::pair{5u, 1u}, {5u, 2u}, {7u, 2u}, {9u, 2u}, {10u, 2u}}) {
    const SumContext ctx = make_ctx(n, k);
    const QuadForm form(ctx);
    const oracle::SumOracle orc(n, k, static_cast<std::uint32_t>(ctx.field().poly().mask()));
    const unsigned d = ctx.params().d;
    std::mt19937_64 rng(n * 100 + k);
    for (int i = 0; i < 40; ++i) {
      const Elem a = static_cast<Elem>(rng()) & (ctx.field().size() - 1);
      const Elem b = (static_cast<Elem>(rng()) & (ctx.field().size() - 1)) | (a == 0 ? 1 : 0);
      const RankResult r = form.kernel_dim(a, b);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(r.kernel_dim_m * d == orc.kernel_dim_gf2(a, b));
      CHECK(r.rank_r + r.kernel_dim_m == ctx.params().s);
      CHECK((r.kernel_dim_m == 1 || r.kernel_dim_m == 3));
      CHECK(r.rank_r % 2 == 0);
      CHECK(form.kernel_basis(a, b).size() == r.kernel_dim_m * d);
      for (Elem v : form.kernel_basis(a, b)) {
        CHECK(form.phi(a, b, v) == 0);
      }
    }
  }
  const QuadForm form(make_ctx(5, 1));
  CHECK(form.kernel_dim(1, 0) == RankResult{1, 4});
  CHECK(code_of([&] { form.kernel_dim(0, 0); }) == ErrorCode::kZeroForm);
}

TEST_CASE("predicted gamma distribution equals the transform multiset") {
  for (auto [n, k] : {std::pair{5u, 1u}, {7u, 3u}, {10u, 2u}}) {
    const SumContext ctx = make_ctx(n, k);
    const QuadForm form(ctx);
    std::mt19937_64 rng(n + k);
    for (int i = 0; i < 100; ++i) {
      const Elem a = static_cast<Elem>(rng()) & (ctx.field().size() - 1);
      const Elem b = (static_cast<Elem>(rng()) & (ctx.field().size() - 1)) | 1;
      CHECK(matches(form.predict_gamma_distribution(a, b), ctx.eval_sum_all_gamma(a, b)));
    }
  }
  const SumContext ctx = make_ctx(5, 1);
  const QuadForm form(ctx);
  CHECK(form.predict_gamma_distribution(1, 0) == GammaDistribution{16, 10, 6, 8});
  // Every rank-2 pair at n = 5 shows the (28, 3, 1) split.
  unsigned rank2 = 0;
  for (Elem a = 0; a < 32; ++a) {
    for (Elem b = 0; b < 32; ++b) {
      if ((a != 0 || b != 0) && form.kernel_dim(a, b).rank_r == 2) {
        ++rank2;
        CHECK(ctx.eval_sum_all_gamma(a, b) == ValueCounts{{-16, 1}, {0, 28}, {16, 3}});
      }
    }
  }
  CHECK(rank2 == 155);
}

TEST_CASE("rank dichotomy over every pair at n = 5 and n = 7") {
  for (auto [n, k] : {std::pair{5u, 1u}, {7u, 1u}}) {
    const SumContext ctx = make_ctx(n, k);
    const QuadForm form(ctx);
    std::uint64_t n3 = 0;
    for (Elem a = 0; a < ctx.field().size(); ++a) {
      for (Elem b = 0; b < ctx.field().size(); ++b) {
        if (a == 0 && b == 0) {
          continue;
        }
        const auto r = form.kernel_dim(a, b);
        REQUIRE((r.kernel_dim_m == 1 || r.kernel_dim_m == 3));
        n3 += r.kernel_dim_m == 3 ? 1 : 0;
      }
    }
    if (n == 5) {
      CHECK(n3 == 155);
    }
    if (n == 7) {
      CHECK(n3 == (63u * 127u) / 3u);
    }
  }
}
