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

#include "fivew/sequences.hpp"

#include <ostream>
#include <random>

#include "fivew/error.hpp"

namespace fivew {

namespace {

using Tally = std::map<std::int64_t, std::uint64_t>;

void merge_tally(Tally& into, const Tally& from) {
  for (const auto& [v, c] : from) {
    into[v] += c;
  }
}

}  // namespace

std::string SequenceId::to_string() const {
  switch (kind) {
    case Kind::kF1: return "F1:" + elem_to_hex(alpha) + ":" + elem_to_hex(beta);
    case Kind::kF2a: return "F2a:" + elem_to_hex(alpha);
    case Kind::kF2b: return "F2b";
  }
  return "?";
}

SequenceId SequenceId::parse(std::string_view text) {
  auto fields = [&] {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
      const std::size_t colon = text.find(':', start);
      out.push_back(text.substr(start, colon - start));
      if (colon == std::string_view::npos) {
        return out;
      }
      start = colon + 1;
    }
  }();
  if (fields[0] == "F1" && fields.size() == 3) {
    return f1(elem_from_hex(fields[1]), elem_from_hex(fields[2]));
  }
  if (fields[0] == "F2a" && fields.size() == 2) {
    return f2a(elem_from_hex(fields[1]));
  }
  if (fields[0] == "F2b" && fields.size() == 1) {
    return f2b();
  }
  throw Error(ErrorCode::kInvalidArgument, "malformed sequence id '" + std::string(text) + "'");
}

std::set<std::int64_t> CorrelationSweep::values() const {
  std::set<std::int64_t> out;
  for (const auto& [v, c] : distribution) {
    if (c != 0) {
      out.insert(v);
    }
  }
  return out;
}

SequenceFamily::SequenceFamily(const SumContext& ctx) : ctx_(ctx) {}

std::uint64_t SequenceFamily::family_size() const {
  const unsigned n = ctx_.params().n;
  return (std::uint64_t{1} << (2 * n)) + (std::uint64_t{1} << n) + 1;
}

SequenceId SequenceFamily::member(std::uint64_t index) const {
  const unsigned n = ctx_.params().n;
  const std::uint64_t size = std::uint64_t{1} << n;
  if (index < size * size) {
    return SequenceId::f1(static_cast<Elem>(index >> n), static_cast<Elem>(index & (size - 1)));
  }
  index -= size * size;
  if (index < size) {
    return SequenceId::f2a(static_cast<Elem>(index));
  }
  if (index == size) {
    return SequenceId::f2b();
  }
  throw Error(ErrorCode::kInvalidArgument, "family index out of range");
}

std::vector<std::uint8_t> SequenceFamily::generate(const SequenceId& id) const {
  const Field& f = ctx_.field();
  const ParamSet& p = ctx_.params();
  if (!f.contains(id.alpha) || !f.contains(id.beta)) {
    throw Error(ErrorCode::kInvalidArgument, "sequence parameter outside GF(2^n)");
  }
  // Coefficients of the (2^2k+1)-, (2^k+1)- and 1-power terms.
  Elem cq = 0, cg = 0, cl = 0;
  switch (id.kind) {
    case SequenceId::Kind::kF1: cq = id.alpha; cg = id.beta; cl = 1; break;
    case SequenceId::Kind::kF2a: cq = id.alpha; cg = 1; break;
    case SequenceId::Kind::kF2b: cq = 1; break;
  }
  const Elem step_quad = f.exp(static_cast<std::int64_t>(p.quad_exponent()));
  const Elem step_gold = f.exp(static_cast<std::int64_t>(p.gold_exponent()));
  Elem quad = 1, gold = 1, lin = 1;
  std::vector<std::uint8_t> out(period());
  for (std::uint32_t l = 0; l < period(); ++l) {
    out[l] = static_cast<std::uint8_t>(f.abs_trace(f.mul(cq, quad) ^ f.mul(cg, gold) ^ f.mul(cl, lin)));
    quad = f.mul(quad, step_quad);
    gold = f.mul(gold, step_gold);
    lin = f.mul(lin, f.generator());
  }
  return out;
}

std::int64_t SequenceFamily::correlate_direct(const SequenceId& a, const SequenceId& b, std::uint32_t tau) const {
  const std::uint32_t len = period();
  if (tau >= len) {
    throw Error(ErrorCode::kInvalidArgument, "shift out of range [0, 2^n - 2]");
  }
  const auto sa = generate(a);
  const auto sb = generate(b);
  std::int64_t sum = 0;
  for (std::uint32_t l = 0; l < len; ++l) {
    std::uint32_t j = l + tau;
    if (j >= len) {
      j -= len;
    }
    sum += (sa[l] ^ sb[j]) ? -1 : 1;
  }
  return sum;
}

std::int64_t SequenceFamily::correlate_reduced(const SequenceId& a, const SequenceId& b, std::uint32_t tau) const {
  if (a.kind != SequenceId::Kind::kF1 || b.kind != SequenceId::Kind::kF1) {
    throw Error(ErrorCode::kInvalidArgument, "reduced correlation is defined for F1 members only");
  }
  if (tau >= period()) {
    throw Error(ErrorCode::kInvalidArgument, "shift out of range [0, 2^n - 2]");
  }
  const Field& f = ctx_.field();
  const ParamSet& p = ctx_.params();
  const auto t = static_cast<std::int64_t>(tau);
  const Elem alpha = a.alpha ^ f.mul(b.alpha, f.exp(t * static_cast<std::int64_t>(p.quad_exponent())));
  const Elem beta = a.beta ^ f.mul(b.beta, f.exp(t * static_cast<std::int64_t>(p.gold_exponent())));
  const Elem gamma = 1 ^ f.exp(t);
  return ctx_.eval_sum(alpha, beta, gamma) - 1;
}

std::set<std::int64_t> SequenceFamily::predicted_values() const {
  const ParamSet& p = ctx_.params();
  const std::int64_t small = std::int64_t{1} << ((p.n + p.d) / 2);
  const std::int64_t large = std::int64_t{1} << ((p.n + 3 * p.d) / 2);
  return {-1, small - 1, -small - 1, large - 1, -large - 1};
}

CorrelationSweep SequenceFamily::sweep_exhaustive(bool whole_family, const ExecOptions& opts) const {
  const unsigned n = ctx_.params().n;
  const std::uint32_t len = period();
  if (len > 64 && !opts.force) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive correlation sweep needs period <= 64 (n <= 6); got n=" + std::to_string(n));
  }
  const std::uint64_t members = whole_family ? family_size() : (std::uint64_t{1} << (2 * n));

  CorrelationSweep sweep;
  sweep.exhaustive = true;
  if (len <= 64) {
    // Packed path: bit l of word = sequence term l.
    const std::uint64_t mask = (len == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << len) - 1);
    std::vector<std::uint64_t> packed(members);
    for (std::uint64_t i = 0; i < members; ++i) {
      const auto bits = generate(member(i));
      std::uint64_t w = 0;
      for (std::uint32_t l = 0; l < len; ++l) {
        w |= static_cast<std::uint64_t>(bits[l]) << l;
      }
      packed[i] = w;
    }
    // rotations[i * len + tau][l] = seq_i[l + tau]
    std::vector<std::uint64_t> rotations(members * len);
    for (std::uint64_t i = 0; i < members; ++i) {
      const std::uint64_t w = packed[i];
      for (std::uint32_t tau = 0; tau < len; ++tau) {
        rotations[i * len + tau] = tau == 0 ? w : (((w >> tau) | (w << (len - tau))) & mask);
      }
    }
    sweep.distribution = parallel_reduce<Tally>(
        members, opts.threads,
        [&](Tally& local, std::uint64_t ia) {
          const std::uint64_t wa = packed[ia];
          std::vector<std::uint64_t> counts(len + 1, 0);
          for (std::uint64_t ib = 0; ib < members; ++ib) {
            const std::uint64_t* rot = &rotations[ib * len];
            for (std::uint32_t tau = (ia == ib) ? 1 : 0; tau < len; ++tau) {
              ++counts[static_cast<std::size_t>(__builtin_popcountll(wa ^ rot[tau]))];
            }
          }
          for (std::uint32_t c = 0; c <= len; ++c) {
            if (counts[c]) {
              local[static_cast<std::int64_t>(len) - 2 * static_cast<std::int64_t>(c)] += counts[c];
            }
          }
        },
        merge_tally);
  } else {
    sweep.distribution = parallel_reduce<Tally>(
        members, opts.threads,
        [&](Tally& local, std::uint64_t ia) {
          const SequenceId a = member(ia);
          for (std::uint64_t ib = 0; ib < members; ++ib) {
            const SequenceId b = member(ib);
            for (std::uint32_t tau = (ia == ib) ? 1 : 0; tau < len; ++tau) {
              ++local[correlate_direct(a, b, tau)];
            }
          }
        },
        merge_tally);
  }
  for (const auto& [v, c] : sweep.distribution) {
    sweep.evaluated += c;
  }
  return sweep;
}

CorrelationSweep SequenceFamily::sweep_sampled(std::uint64_t samples, std::uint64_t seed, bool keep_records,
                                               const ExecOptions& opts) const {
  std::mt19937_64 rng(seed);
  const std::uint64_t members = family_size();
  const std::uint32_t len = period();
  std::vector<CorrelationRecord> tasks;
  tasks.reserve(samples);
  while (tasks.size() < samples) {
    CorrelationRecord r;
    const std::uint64_t ia = rng() % members;
    const std::uint64_t ib = rng() % members;
    r.tau = static_cast<std::uint32_t>(rng() % len);
    if (ia == ib && r.tau == 0) {
      continue;
    }
    r.a = member(ia);
    r.b = member(ib);
    tasks.push_back(r);
  }
  parallel_reduce<int>(
      samples, opts.threads,
      [&](int&, std::uint64_t i) { tasks[i].value = correlate_direct(tasks[i].a, tasks[i].b, tasks[i].tau); },
      [](int&, const int&) {});

  CorrelationSweep sweep;
  sweep.seed = seed;
  sweep.evaluated = samples;
  for (const auto& r : tasks) {
    ++sweep.distribution[r.value];
  }
  if (keep_records) {
    sweep.records = std::move(tasks);
  }
  return sweep;
}

void write_correlation_csv(std::ostream& out, const std::vector<CorrelationRecord>& records) {
  out << "id_a,id_b,tau,value\n";
  for (const auto& r : records) {
    out << r.a.to_string() << ',' << r.b.to_string() << ',' << r.tau << ',' << r.value << '\n';
  }
}

}  // namespace fivew
