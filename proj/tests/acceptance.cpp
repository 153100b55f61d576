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

// Acceptance suite: one line per criterion, integer-exact throughout.
// Exit status is zero only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fivew/codes.hpp"
#include "fivew/distribution.hpp"
#include "fivew/error.hpp"
#include "fivew/quadform.hpp"
#include "fivew/sequences.hpp"
#include "oracles.hpp"

using namespace fivew;

namespace {

const std::pair<unsigned, unsigned> kExhaustiveSets[] = {{5, 1}, {5, 2}, {7, 1}, {7, 2},
                                                         {7, 3}, {9, 1}, {9, 2}, {9, 4}};
const std::pair<unsigned, unsigned> kSampledSets[] = {{15, 3}, {15, 6}};

SumContext make_ctx(unsigned n, unsigned k) { return SumContext(Field::build(n), ParamSet::make(n, k)); }

std::string tag(unsigned n, unsigned k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

// Collects the first failure message; detail is printed either way.
struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

BigInt m3_formula(const ParamSet& p) { return pow2(p.n + p.d) + pow2(p.n) - pow2(p.d); }

Outcome closed_form_table() {
  Outcome out;
  for (auto [n, k] : kExhaustiveSets) {
    const SumContext ctx = make_ctx(n, k);
    const auto t0 = std::chrono::steady_clock::now();
    ExecOptions single;
    single.threads = 1;
    const ValueDistribution brute = brute_force_distribution(ctx, single);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.require(brute == closed_form_distribution(ctx.params()), "brute force differs from closed form at " + tag(n, k));
    if (n == 7) {
      out.require(secs <= 5.0, "n=7 enumeration took " + std::to_string(secs) + " s");
    }
    if (n == 9) {
      out.require(secs <= 600.0, "n=9 enumeration took " + std::to_string(secs) + " s");
    }
  }
  ValueDistribution spot(ParamSet::make(5, 1));
  spot.add(8, 8680);
  spot.add(-8, 5208);
  spot.add(16, 465);
  spot.add(-16, 155);
  spot.add(0, 18259);
  spot.add(32, 1);
  out.require(brute_force_distribution(make_ctx(5, 1)) == spot, "n=5 spot table");
  if (out.ok) {
    out.detail = "8 parameter sets, six rows each, n=5 spot table matches";
  }
  return out;
}

Outcome rank_census_check() {
  Outcome out;
  for (auto [n, k] : kExhaustiveSets) {
    const ParamSet p = ParamSet::make(n, k);
    const RankCensus got = rank_census(QuadForm(make_ctx(n, k)));
    out.require(got == closed_form_census(p), "census differs at " + tag(n, k));
    out.require(got.n1 + got.n3 == pow2(2 * n) - 1, "n1+n3 identity at " + tag(n, k));
    out.require(got.n1 + pow2(2 * p.d) * got.n3 == pow2(n - p.d) * (pow2(p.d) + 1) * (pow2(n) - 1),
                "weighted identity at " + tag(n, k));
  }
  const RankCensus c5 = rank_census(QuadForm(make_ctx(5, 1)));
  out.require(c5.n1 == 868 && c5.n3 == 155, "n=5 census " + to_decimal(c5.n1) + "/" + to_decimal(c5.n3));
  if (out.ok) {
    out.detail = "8 parameter sets, n=5 n1=868 n3=155, both identities hold";
  }
  return out;
}

Outcome moments() {
  Outcome out;
  for (auto [n, k] : kExhaustiveSets) {
    const SumContext ctx = make_ctx(n, k);
    const ParamSet& p = ctx.params();
    const ValueDistribution brute = brute_force_distribution(ctx);
    out.require(brute.moment(1) == pow2(3 * n), "first moment at " + tag(n, k));
    out.require(brute.moment(2) == pow2(4 * n), "second moment at " + tag(n, k));
    out.require(brute.moment(3) == m3_formula(p) * pow2(3 * n), "third moment at " + tag(n, k));
    // Independent path: cubes summed straight from the batch transform.
    out.require(third_moment(ctx) == m3_formula(p) * pow2(3 * n), "direct third moment at " + tag(n, k));
    out.require(BigInt(count_m3(ctx)) == m3_formula(p), "M3 count at " + tag(n, k));
  }
  if (out.ok) {
    out.detail = "sum S, sum S^2, sum S^3 and M3 exact for 8 parameter sets (n=9: M3=1534)";
  }
  return out;
}

Outcome weights() {
  Outcome out;
  const CyclicCode code = CyclicCode::build(make_ctx(5, 1));
  out.require(code.spec().length == 31, "length");
  out.require(code.spec().dimension == 15, "dimension");
  const std::map<std::int64_t, BigInt> expected{{0, 1}, {8, 465}, {12, 8680}, {16, 18259}, {20, 5208}, {24, 155}};
  std::map<std::int64_t, BigInt> counted;
  std::uint64_t mismatches = 0;
  for (Elem a = 0; a < 32; ++a) {
    for (Elem b = 0; b < 32; ++b) {
      for (Elem g = 0; g < 32; ++g) {
        const Label l{a, b, g};
        const unsigned w = code.codeword(l).weight();
        counted[w] += 1;
        mismatches += static_cast<std::int64_t>(w) == code.weight_of(l) ? 0 : 1;
      }
    }
  }
  out.require(mismatches == 0, std::to_string(mismatches) + " weight_of mismatches");
  out.require(counted == expected, "Hamming-weight enumerator");
  out.require(code.weight_distribution() == expected, "enumerator from the value distribution");
  out.require(counted.size() - 1 == 5, "nonzero weight count");
  if (out.ok) {
    out.detail = "[31,15] code, enumerator {0:1, 8:465, 12:8680, 16:18259, 20:5208, 24:155}, 32768/32768 weights agree";
  }
  return out;
}

Outcome dichotomy() {
  Outcome out;
  for (auto [n, k] : kExhaustiveSets) {
    out.require(rank_census(QuadForm(make_ctx(n, k))).other == 0, "rank outside {s-1, s-3} at " + tag(n, k));
  }
  std::ostringstream info;
  for (auto [n, k] : kSampledSets) {
    const SumContext ctx = make_ctx(n, k);
    const ParamSet& p = ctx.params();
    const QuadForm form(ctx);
    const SampledRankCheck s = sampled_rank_check(form, 10000, 1);
    out.require(s.census.other == 0, "sampled rank outside {s-1, s-3} at " + tag(n, k));
    out.require(s.census.n3 > 0, "no rank s-3 pair sampled at " + tag(n, k));
    out.require(value_magnitude(p, p.s - 1) == 512 && value_magnitude(p, p.s - 3) == 4096,
                "magnitudes at " + tag(n, k));
    // Observed spectra carry exactly the predicted magnitude.
    std::mt19937_64 rng(7);
    const Elem mask = ctx.field().size() - 1;
    std::set<std::int64_t> seen;
    unsigned tested = 0;
    while (tested < 300 || seen.count(4096) == 0) {
      const Elem a = static_cast<Elem>(rng()) & mask;
      const Elem b = static_cast<Elem>(rng()) & mask;
      if (a == 0 && b == 0) {
        continue;
      }
      const auto r = form.kernel_dim(a, b);
      const std::int64_t mag = value_magnitude(p, r.rank_r);
      for (std::int32_t v : ctx.gamma_spectrum(a, b)) {
        out.require(v == 0 || v == mag || v == -mag, "spectrum value " + std::to_string(v) + " at " + tag(n, k));
        if (v != 0) {
          seen.insert(v < 0 ? -v : v);
        }
      }
      ++tested;
      if (tested > 200000) {
        out.require(false, "no rank s-3 pair found at " + tag(n, k));
        break;
      }
    }
    out.require(seen == std::set<std::int64_t>{512, 4096}, "magnitudes observed at " + tag(n, k));
    info << " " << tag(n, k) << ": 10000 pairs n1=" << to_decimal(s.census.n1) << " n3=" << to_decimal(s.census.n3);
  }
  if (out.ok) {
    out.detail = "exhaustive for 8 sets;" + info.str() + "; magnitudes 512 and 4096";
  }
  return out;
}

Outcome gamma_distribution() {
  Outcome out;
  constexpr int kPairs = 1000;
  for (auto [n, k] : kExhaustiveSets) {
    const SumContext ctx = make_ctx(n, k);
    const QuadForm form(ctx);
    const Elem mask = ctx.field().size() - 1;
    std::mt19937_64 rng(1000 + n * 10 + k);
    for (int i = 0; i < kPairs; ++i) {
      Elem a = static_cast<Elem>(rng()) & mask;
      const Elem b = static_cast<Elem>(rng()) & mask;
      if (a == 0 && b == 0) {
        a = 1;
      }
      const ValueCounts batch = ctx.eval_sum_all_gamma(a, b);
      out.require(matches(form.predict_gamma_distribution(a, b), batch), "prediction at " + tag(n, k));
      ValueCounts direct;
      for (Elem g = 0; g <= mask; ++g) {
        ++direct[ctx.eval_sum(a, b, g)];
      }
      out.require(direct == batch, "direct multiset at " + tag(n, k));
    }
  }
  for (auto [n, k] : kSampledSets) {
    const SumContext ctx = make_ctx(n, k);
    const QuadForm form(ctx);
    const Elem mask = ctx.field().size() - 1;
    std::mt19937_64 rng(2000 + k);
    for (int i = 0; i < kPairs; ++i) {
      const Elem a = static_cast<Elem>(rng()) & mask;
      const Elem b = (static_cast<Elem>(rng()) & mask) | 1;
      const auto spectrum = ctx.gamma_spectrum(a, b);
      ValueCounts batch;
      for (auto v : spectrum) {
        ++batch[v];
      }
      out.require(matches(form.predict_gamma_distribution(a, b), batch), "prediction at " + tag(n, k));
      for (int j = 0; j < 4; ++j) {
        const Elem g = static_cast<Elem>(rng()) & mask;
        out.require(spectrum[ctx.functional_mask(g)] == ctx.eval_sum(a, b, g), "point query at " + tag(n, k));
      }
    }
  }
  if (out.ok) {
    out.detail = "1000 pairs per set; full direct multisets for n<=9, point queries at n=15";
  }
  return out;
}

Outcome correlation() {
  Outcome out;
  for (unsigned n : {5u, 7u}) {
    const SequenceFamily fam(make_ctx(n, 1));
    const Elem mask = (Elem{1} << n) - 1;
    std::mt19937_64 rng(300 + n);
    for (int i = 0; i < 200; ++i) {
      const SequenceId a = SequenceId::f1(static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask);
      const SequenceId b = SequenceId::f1(static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask);
      const auto tau = static_cast<std::uint32_t>(rng() % fam.period());
      out.require(fam.correlate_reduced(a, b, tau) == fam.correlate_direct(a, b, tau),
                  "reduced != direct at n=" + std::to_string(n));
    }
  }
  const SequenceFamily f5(make_ctx(5, 1));
  const auto values = f5.sweep_exhaustive(false).values();
  out.require(values == std::set<std::int64_t>{-1, 7, -9, 15, -17}, "n=5 exhaustive value set");
  if (out.ok) {
    out.detail = "200 reduced/direct pairs at n=5 and n=7; n=5 exhaustive set {-17, -9, -1, 7, 15}";
  }
  return out;
}

Outcome properties() {
  Outcome out;
  std::vector<std::pair<unsigned, unsigned>> sets(std::begin(kExhaustiveSets), std::end(kExhaustiveSets));
  sets.insert(sets.end(), std::begin(kSampledSets), std::end(kSampledSets));
  for (auto [n, k] : sets) {
    const SumContext ctx = make_ctx(n, k);
    const Field& f = ctx.field();
    const oracle::Gf gf{n, static_cast<std::uint32_t>(f.poly().mask())};
    const Elem mask = f.size() - 1;
    std::mt19937_64 rng(400 + n * 10 + k);

    for (int i = 0; i < 3000; ++i) {
      const Elem a = static_cast<Elem>(rng()) & mask;
      const Elem b = static_cast<Elem>(rng()) & mask;
      const Elem c = static_cast<Elem>(rng()) & mask;
      bool ok = f.mul(a, b) == gf.mul(a, b) && f.mul(a, b) == f.mul(b, a) &&
                f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)) && f.mul(a, b ^ c) == (f.mul(a, b) ^ f.mul(a, c)) &&
                f.mul(a, 1) == a && f.mul(a, 0) == 0;
      if (a != 0) {
        ok = ok && f.mul(a, f.inv(a)) == 1;
      }
      out.require(ok, "field axioms at " + tag(n, k));
    }

    std::uint64_t ones = 0;
    for (Elem x = 0; x <= mask; ++x) {
      ones += f.abs_trace(x);
    }
    out.require(ones == f.size() / 2, "trace balance at " + tag(n, k));

    const CyclicCode code = CyclicCode::build(ctx);
    std::vector<bool> check_root(f.order(), false);
    for (std::uint64_t e : {std::uint64_t{1}, ctx.params().gold_exponent(), ctx.params().quad_exponent()}) {
      for (auto j : f.cyclotomic_coset(f.order() - e)) {
        check_root[j] = true;
      }
    }
    const int words = n <= 9 ? 200 : 20;
    for (int i = 0; i < words; ++i) {
      const Label l1{static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask};
      const Label l2{static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask, static_cast<Elem>(rng()) & mask};
      const Codeword w1 = code.codeword(l1);
      const Codeword w2 = code.codeword(l2);
      out.require((w1 ^ w2).same_bits(code.codeword({l1.alpha ^ l2.alpha, l1.beta ^ l2.beta, l1.gamma ^ l2.gamma})),
                  "linearity at " + tag(n, k));
      out.require(w1.rotated(1).same_bits(code.codeword(code.shift_label(l1))), "cyclic closure at " + tag(n, k));
      for (int j = 0; j < 8; ++j) {
        std::uint32_t e = static_cast<std::uint32_t>(rng() % f.order());
        while (check_root[e]) {
          e = (e + 1) % f.order();
        }
        out.require(code.evaluate(w1, f.exp(e)) == 0, "parity-check zero at " + tag(n, k));
      }
    }
  }
  if (out.ok) {
    out.detail = "field axioms, trace balance, linearity, cyclic closure, zeroes on 10 parameter sets";
  }
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"value distribution equals the closed-form table", closed_form_table},
      {"rank census", rank_census_check},
      {"moment identities and M3 count", moments},
      {"weight distribution of the n=5 code", weights},
      {"rank dichotomy", dichotomy},
      {"per-pair gamma distribution", gamma_distribution},
      {"correlation reduction and value set", correlation},
      {"property suite", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] criterion %d: %s -- %s (%lld ms)\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.c_str(),
                static_cast<long long>(ms));
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
