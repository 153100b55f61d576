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

// Value distribution of S(a, b, g) over all of GF(2^n)^3: the six-row
// closed form, and two exhaustive routes (Walsh transform per (a, b), and
// rank census combined with the per-rank gamma distribution).

#ifndef FIVEW_DISTRIBUTION_HPP
#define FIVEW_DISTRIBUTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fivew/bigint.hpp"
#include "fivew/expsum.hpp"
#include "fivew/quadform.hpp"

namespace fivew {

class ValueDistribution {
 public:
  ValueDistribution() = default;
  explicit ValueDistribution(ParamSet params) : params_(params) {}
  static ValueDistribution from_counts(ParamSet params, const ValueCounts& counts);

  const ParamSet& params() const { return params_; }
  const std::map<std::int64_t, BigInt>& entries() const { return entries_; }
  void add(std::int64_t value, const BigInt& multiplicity);
  BigInt multiplicity(std::int64_t value) const;

  // sum of value^order * multiplicity; order 0 is the total count.
  BigInt moment(unsigned order) const;
  // Empty when all three moment checksums and the total hold.
  std::vector<std::string> checksum_failures() const;

  // Hamming weight 2^(n-1) - value/2 of the matching codeword.
  std::int64_t weight_of_value(std::int64_t value) const;
  std::map<std::int64_t, BigInt> weights() const;
  // Number of distinct weights other than 0.
  unsigned nonzero_weight_count() const;

  friend bool operator==(const ValueDistribution& a, const ValueDistribution& b) {
    return a.params_ == b.params_ && a.entries_ == b.entries_;
  }

 private:
  ParamSet params_;
  std::map<std::int64_t, BigInt> entries_;
};

struct RankCensus {
  BigInt n1;  // pairs with rank s-1
  BigInt n3;  // pairs with rank s-3
  // Pairs with any other rank; zero whenever the dichotomy holds.
  BigInt other;

  friend bool operator==(const RankCensus&, const RankCensus&) = default;
};

// Throws InexactMultiplicity if any row is not an integer.
ValueDistribution closed_form_distribution(const ParamSet& p);
RankCensus closed_form_census(const ParamSet& p);
// Count of triples with S = 0, from n1 and n3.
BigInt xi_count(const ParamSet& p);
// n1 + n3 = 2^2n - 1 and n1 + 2^2d n3 = 2^(n-d) (2^d + 1)(2^n - 1).
bool census_identities_hold(const ParamSet& p, const RankCensus& c);

// Walsh-transform route over every (a, b).
ValueDistribution brute_force_distribution(const SumContext& ctx, const ExecOptions& opts = {});

struct RankSweep {
  RankCensus census;
  // Per-rank gamma distributions summed over all pairs, plus (0, 0).
  ValueDistribution distribution;
};
// Kernel-rank route over every (a, b) != (0, 0).
RankSweep rank_sweep(const QuadForm& form, const ExecOptions& opts = {});
RankCensus rank_census(const QuadForm& form, const ExecOptions& opts = {});

struct SampledRankCheck {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  RankCensus census;  // over the sampled pairs
};
// Uniform nonzero (a, b) from a seeded generator.
SampledRankCheck sampled_rank_check(const QuadForm& form, std::uint64_t samples, std::uint64_t seed,
                                    const ExecOptions& opts = {});

}  // namespace fivew

#endif  // FIVEW_DISTRIBUTION_HPP
