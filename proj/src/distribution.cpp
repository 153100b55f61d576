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

#include "fivew/distribution.hpp"

#include <random>
#include <utility>

#include "fivew/error.hpp"

namespace fivew {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* row) {
  if (num % den != 0) {
    throw Error(ErrorCode::kInexactMultiplicity,
                std::string("closed-form row '") + row + "' is not an integer: " + num.str() + " / " + den.str());
  }
  return num / den;
}

}  // namespace

ValueDistribution ValueDistribution::from_counts(ParamSet params, const ValueCounts& counts) {
  ValueDistribution out(params);
  for (const auto& [value, count] : counts) {
    out.add(value, BigInt(count));
  }
  return out;
}

void ValueDistribution::add(std::int64_t value, const BigInt& multiplicity) {
  if (multiplicity == 0) {
    return;
  }
  entries_[value] += multiplicity;
}

BigInt ValueDistribution::multiplicity(std::int64_t value) const {
  const auto it = entries_.find(value);
  return it == entries_.end() ? BigInt(0) : it->second;
}

BigInt ValueDistribution::moment(unsigned order) const {
  BigInt sum = 0;
  for (const auto& [value, mult] : entries_) {
    BigInt term = mult;
    for (unsigned i = 0; i < order; ++i) {
      term *= value;
    }
    sum += term;
  }
  return sum;
}

std::vector<std::string> ValueDistribution::checksum_failures() const {
  const ParamSet& p = params_;
  std::vector<std::string> failures;
  const std::pair<unsigned, BigInt> expected[] = {
      {0, pow2(3 * p.n)},
      {1, pow2(3 * p.n)},
      {2, pow2(4 * p.n)},
      {3, third_moment_closed_form(p)},
  };
  for (const auto& [order, want] : expected) {
    const BigInt got = moment(order);
    if (got != want) {
      failures.push_back("moment " + std::to_string(order) + ": expected " + want.str() + ", got " + got.str());
    }
  }
  return failures;
}

std::int64_t ValueDistribution::weight_of_value(std::int64_t value) const {
  return (std::int64_t{1} << (params_.n - 1)) - value / 2;
}

std::map<std::int64_t, BigInt> ValueDistribution::weights() const {
  std::map<std::int64_t, BigInt> out;
  for (const auto& [value, mult] : entries_) {
    out[weight_of_value(value)] += mult;
  }
  return out;
}

unsigned ValueDistribution::nonzero_weight_count() const {
  unsigned count = 0;
  for (const auto& [weight, mult] : weights()) {
    if (weight != 0 && mult != 0) {
      ++count;
    }
  }
  return count;
}

ValueDistribution closed_form_distribution(const ParamSet& p) {
  const unsigned n = p.n;
  const unsigned d = p.d;
  const BigInt q = pow2(n);
  const BigInt den = pow2(2 * d) - 1;
  const BigInt big = pow2(n + 2 * d) - pow2(n) - pow2(n - d) + pow2(2 * d);
  const BigInt low_hi = pow2(n - d - 1);
  const BigInt low_lo = pow2((n - d - 2) / 2);
  const BigInt high_hi = pow2(n - 3 * d - 1);
  const BigInt high_lo = pow2((n - 3 * d - 2) / 2);

  const std::int64_t small_value = std::int64_t{1} << ((n + d) / 2);
  const std::int64_t large_value = std::int64_t{1} << ((n + 3 * d) / 2);

  ValueDistribution out(p);
  out.add(small_value, exact_div((low_hi + low_lo) * (q - 1) * big, den, "+2^((n+d)/2)"));
  out.add(-small_value, exact_div((low_hi - low_lo) * (q - 1) * big, den, "-2^((n+d)/2)"));
  out.add(large_value, exact_div((high_hi + high_lo) * (pow2(n - d) - 1) * (q - 1), den, "+2^((n+3d)/2)"));
  out.add(-large_value, exact_div((high_hi - high_lo) * (pow2(n - d) - 1) * (q - 1), den, "-2^((n+3d)/2)"));
  out.add(0, (q - 1) * (pow2(2 * n) - pow2(2 * n - d) + pow2(2 * n - 4 * d) + q - pow2(n - d) - pow2(n - 3 * d) + 1));
  out.add(std::int64_t{1} << n, 1);
  return out;
}

RankCensus closed_form_census(const ParamSet& p) {
  const unsigned n = p.n;
  const unsigned d = p.d;
  const BigInt den = pow2(2 * d) - 1;
  RankCensus c;
  c.n1 = exact_div((pow2(n) - 1) * (pow2(n + 2 * d) - pow2(n) - pow2(n - d) + pow2(2 * d)), den, "n1");
  c.n3 = exact_div((pow2(n - d) - 1) * (pow2(n) - 1), den, "n3");
  return c;
}

BigInt xi_count(const ParamSet& p) {
  const RankCensus c = closed_form_census(p);
  const BigInt q = pow2(p.n);
  return (q - 1) + (q - pow2(p.n - p.d)) * c.n1 + (q - pow2(p.n - 3 * p.d)) * c.n3;
}

bool census_identities_hold(const ParamSet& p, const RankCensus& c) {
  const BigInt q = pow2(p.n);
  return c.n1 + c.n3 == q * q - 1 &&
         c.n1 + pow2(2 * p.d) * c.n3 == pow2(p.n - p.d) * (pow2(p.d) + 1) * (q - 1);
}

ValueDistribution brute_force_distribution(const SumContext& ctx, const ExecOptions& opts) {
  const ParamSet& p = ctx.params();
  check_budget(p.n, opts, "brute_force_distribution");
  const std::uint64_t size = ctx.field().size();
  ctx.quad_powers();
  // Tally indexed by value + 2^n.
  using Tally = std::vector<std::uint64_t>;
  const Tally tally = parallel_reduce<Tally>(
      size * size - 1, opts.threads,
      [&](Tally& local, std::uint64_t i) {
        const std::uint64_t pair = i + 1;
        const auto spectrum = ctx.gamma_spectrum(static_cast<Elem>(pair / size), static_cast<Elem>(pair % size));
        for (std::int32_t v : spectrum) {
          ++local[static_cast<std::size_t>(v + static_cast<std::int64_t>(size))];
        }
      },
      [](Tally& into, const Tally& from) {
        for (std::size_t j = 0; j < into.size(); ++j) {
          into[j] += from[j];
        }
      },
      Tally(2 * size + 1, 0));

  ValueDistribution out(p);
  out.add(static_cast<std::int64_t>(size), 1);
  out.add(0, BigInt(size - 1));
  for (std::size_t j = 0; j < tally.size(); ++j) {
    if (tally[j] != 0) {
      out.add(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(size), BigInt(tally[j]));
    }
  }
  return out;
}

RankSweep rank_sweep(const QuadForm& form, const ExecOptions& opts) {
  const ParamSet& p = form.context().params();
  check_budget(p.n, opts, "rank_sweep");
  const std::uint64_t size = form.context().field().size();
  using Tally = std::vector<std::uint64_t>;  // indexed by rank
  const Tally by_rank = parallel_reduce<Tally>(
      size * size - 1, opts.threads,
      [&](Tally& local, std::uint64_t i) {
        const std::uint64_t pair = i + 1;
        ++local[form.kernel_dim(static_cast<Elem>(pair / size), static_cast<Elem>(pair % size)).rank_r];
      },
      [](Tally& into, const Tally& from) {
        for (std::size_t j = 0; j < into.size(); ++j) {
          into[j] += from[j];
        }
      },
      Tally(p.s + 1, 0));

  RankSweep out;
  out.distribution = ValueDistribution(p);
  out.distribution.add(std::int64_t{1} << p.n, 1);
  out.distribution.add(0, BigInt(size - 1));
  for (unsigned r = 0; r <= p.s; ++r) {
    if (by_rank[r] == 0) {
      continue;
    }
    if (r + 1 == p.s) {
      out.census.n1 = by_rank[r];
    } else if (r + 3 == p.s) {
      out.census.n3 = by_rank[r];
    } else {
      out.census.other += by_rank[r];
    }
    if (r == 0 || r % 2 != 0) {
      // Not a valid form rank; leaves the distribution short so the
      // comparison against the closed form fails.
      continue;
    }
    const GammaDistribution g = gamma_distribution_for_rank(p, r);
    const BigInt pairs(by_rank[r]);
    out.distribution.add(0, pairs * g.count_zero);
    out.distribution.add(g.magnitude, pairs * g.count_plus);
    out.distribution.add(-g.magnitude, pairs * g.count_minus);
  }
  return out;
}

RankCensus rank_census(const QuadForm& form, const ExecOptions& opts) { return rank_sweep(form, opts).census; }

SampledRankCheck sampled_rank_check(const QuadForm& form, std::uint64_t samples, std::uint64_t seed,
                                    const ExecOptions& opts) {
  const ParamSet& p = form.context().params();
  const std::uint32_t mask = form.context().field().size() - 1;
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(samples);
  while (pairs.size() < samples) {
    const auto a = static_cast<Elem>(rng() & mask);
    const auto b = static_cast<Elem>(rng() & mask);
    if (a != 0 || b != 0) {
      pairs.emplace_back(a, b);
    }
  }
  using Tally = std::vector<std::uint64_t>;
  const Tally by_rank = parallel_reduce<Tally>(
      samples, opts.threads,
      [&](Tally& local, std::uint64_t i) { ++local[form.kernel_dim(pairs[i].first, pairs[i].second).rank_r]; },
      [](Tally& into, const Tally& from) {
        for (std::size_t j = 0; j < into.size(); ++j) {
          into[j] += from[j];
        }
      },
      Tally(p.s + 1, 0));
  SampledRankCheck out;
  out.samples = samples;
  out.seed = seed;
  for (unsigned r = 0; r <= p.s; ++r) {
    if (r + 1 == p.s) {
      out.census.n1 = by_rank[r];
    } else if (r + 3 == p.s) {
      out.census.n3 = by_rank[r];
    } else {
      out.census.other += by_rank[r];
    }
  }
  return out;
}

}  // namespace fivew
