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

// Binary sequences of period 2^n - 1 built from the same trace terms as the
// code, and their periodic cross-correlation.
//
//   F1(a, b):  Tr(a pi^(l(2^2k+1)) + b pi^(l(2^k+1)) + pi^l)
//   F2a(a):    Tr(a pi^(l(2^2k+1)) + pi^(l(2^k+1)))
//   F2b:       Tr(pi^(l(2^2k+1)))
//
// Family size 2^2n + 2^n + 1.

#ifndef FIVEW_SEQUENCES_HPP
#define FIVEW_SEQUENCES_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fivew/expsum.hpp"

namespace fivew {

struct SequenceId {
  enum class Kind { kF1, kF2a, kF2b };

  Kind kind = Kind::kF1;
  Elem alpha = 0;
  Elem beta = 0;

  static SequenceId f1(Elem a, Elem b) { return {Kind::kF1, a, b}; }
  static SequenceId f2a(Elem a) { return {Kind::kF2a, a, 0}; }
  static SequenceId f2b() { return {Kind::kF2b, 0, 0}; }

  // "F1:0x3:0x1F", "F2a:0x3", "F2b"
  std::string to_string() const;
  static SequenceId parse(std::string_view text);

  friend bool operator==(const SequenceId&, const SequenceId&) = default;
};

struct CorrelationRecord {
  SequenceId a;
  SequenceId b;
  std::uint32_t tau = 0;
  std::int64_t value = 0;
};

struct CorrelationSweep {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::uint64_t evaluated = 0;  // non-trivial (pair, shift) tuples
  // Empirical; no closed form is claimed for the distribution.
  std::map<std::int64_t, std::uint64_t> distribution;
  // Filled only when requested.
  std::vector<CorrelationRecord> records;

  std::set<std::int64_t> values() const;
};

class SequenceFamily {
 public:
  explicit SequenceFamily(const SumContext& ctx);

  const SumContext& context() const { return ctx_; }
  std::uint32_t period() const { return ctx_.field().order(); }
  std::uint64_t family_size() const;
  // Member at position index in [0, family_size()): F1 first, then F2a, F2b.
  SequenceId member(std::uint64_t index) const;

  std::vector<std::uint8_t> generate(const SequenceId& id) const;

  // sum_l (-1)^(a(l) + b(l + tau)) over one period.
  std::int64_t correlate_direct(const SequenceId& a, const SequenceId& b, std::uint32_t tau) const;
  // S(a1 + a2 pi^(tau(2^2k+1)), b1 + b2 pi^(tau(2^k+1)), 1 + pi^tau) - 1.
  // Both ids must be in F1; throws InvalidArgument otherwise.
  std::int64_t correlate_reduced(const SequenceId& a, const SequenceId& b, std::uint32_t tau) const;

  // -1, +-2^((n+d)/2) - 1, +-2^((n+3d)/2) - 1.
  std::set<std::int64_t> predicted_values() const;

  // Every pair and shift, excluding the trivial peak (same id, tau = 0).
  // With whole_family false only F1 x F1 is swept. Period <= 64 unless
  // opts.force.
  CorrelationSweep sweep_exhaustive(bool whole_family, const ExecOptions& opts = {}) const;
  // Uniform members of the whole family and uniform shifts.
  CorrelationSweep sweep_sampled(std::uint64_t samples, std::uint64_t seed, bool keep_records,
                                 const ExecOptions& opts = {}) const;

 private:
  SumContext ctx_;
};

// Columns id_a,id_b,tau,value.
void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRecord>& records);

}  // namespace fivew

#endif  // FIVEW_SEQUENCES_HPP
