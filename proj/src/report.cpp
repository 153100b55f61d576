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

#include "fivew/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "fivew/codes.hpp"
#include "fivew/error.hpp"
#include "fivew/quadform.hpp"
#include "fivew/sequences.hpp"

namespace fivew {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = false;
  std::string expected;
  std::string observed;
};

template <typename Map>
std::string render_map(const Map& m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [key, value] : m) {
    if (!first) {
      os << ", ";
    }
    first = false;
    os << key << ':' << value;
  }
  os << '}';
  return os.str();
}

std::string render_set(const std::set<std::int64_t>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::int64_t v : s) {
    os << (first ? "" : ", ") << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string render_census(const RankCensus& c) {
  return "n1=" + c.n1.str() + " n3=" + c.n3.str() + " other=" + c.other.str();
}

class CheckRunner {
 public:
  explicit CheckRunner(VerificationReport& report) : report_(report) {}

  void run(const std::string& name, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    CheckResult r;
    r.name = name;
    try {
      Outcome o = body();
      r.status = o.pass ? CheckStatus::kPass : CheckStatus::kFail;
      r.expected = std::move(o.expected);
      r.observed = std::move(o.observed);
    } catch (const Error& e) {
      r.status = CheckStatus::kFail;
      r.observed = std::string(error_name(e.code())) + ": " + e.what();
    } catch (const std::exception& e) {
      r.status = CheckStatus::kFail;
      r.observed = std::string("InternalError: ") + e.what();
    }
    r.elapsed_ms = ms_since(start);
    report_.checks.push_back(std::move(r));
  }

  void skip(const std::string& name, const std::string& reason) {
    CheckResult r;
    r.name = name;
    r.status = CheckStatus::kSkip;
    r.observed = reason;
    report_.checks.push_back(std::move(r));
  }

 private:
  VerificationReport& report_;
};

std::vector<std::pair<Elem, Elem>> random_pairs(std::mt19937_64& rng, std::uint32_t size, std::uint64_t count) {
  std::vector<std::pair<Elem, Elem>> out;
  while (out.size() < count) {
    const auto a = static_cast<Elem>(rng() & (size - 1));
    const auto b = static_cast<Elem>(rng() & (size - 1));
    if (a != 0 || b != 0) {
      out.emplace_back(a, b);
    }
  }
  return out;
}

Label random_label(std::mt19937_64& rng, std::uint32_t size) {
  return Label{static_cast<Elem>(rng() & (size - 1)), static_cast<Elem>(rng() & (size - 1)),
               static_cast<Elem>(rng() & (size - 1))};
}

}  // namespace

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kSkip: return "SKIP";
  }
  return "FAIL";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "PASS") return CheckStatus::kPass;
  if (s == "SKIP") return CheckStatus::kSkip;
  if (s == "FAIL") return CheckStatus::kFail;
  throw Error(ErrorCode::kInvalidArgument, "unknown check status '" + s + "'");
}

bool VerificationReport::pass() const {
  bool any = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) {
      return false;
    }
    any = any || c.status == CheckStatus::kPass;
  }
  return any;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["params"] = {{"n", params.n}, {"k", params.k}, {"d", params.d}, {"s", params.s}, {"poly", params.poly}};
  j["mode"] = mode;
  j["seed"] = std::to_string(seed);
  j["samples"] = std::to_string(samples);
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"name", c.name},
                           {"status", status_name(c.status)},
                           {"expected", c.expected},
                           {"observed", c.observed},
                           {"elapsed_ms", c.elapsed_ms}});
  }
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    j["entries"].push_back({{"value", e.value}, {"weight", e.weight}, {"multiplicity", e.multiplicity}});
  }
  j["elapsed_ms"] = elapsed_ms;
  j["status"] = pass() ? "PASS" : "FAIL";
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r;
  const auto& p = j.at("params");
  r.params.n = p.at("n").get<unsigned>();
  r.params.k = p.at("k").get<unsigned>();
  r.params.d = p.at("d").get<unsigned>();
  r.params.s = p.at("s").get<unsigned>();
  r.params.poly = p.at("poly").get<std::string>();
  r.mode = j.at("mode").get<std::string>();
  r.seed = std::stoull(j.at("seed").get<std::string>());
  r.samples = std::stoull(j.at("samples").get<std::string>());
  for (const auto& c : j.at("checks")) {
    CheckResult cr;
    cr.name = c.at("name").get<std::string>();
    cr.status = parse_status(c.at("status").get<std::string>());
    cr.expected = c.at("expected").get<std::string>();
    cr.observed = c.at("observed").get<std::string>();
    cr.elapsed_ms = c.at("elapsed_ms").get<std::int64_t>();
    r.checks.push_back(std::move(cr));
  }
  for (const auto& e : j.at("entries")) {
    r.entries.push_back(TableEntry{e.at("value").get<std::int64_t>(), e.at("weight").get<std::int64_t>(),
                                   e.at("multiplicity").get<std::string>()});
  }
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  return r;
}

ReportParams report_params(const SumContext& ctx) {
  const ParamSet& p = ctx.params();
  return ReportParams{p.n, p.k, p.d, p.s, ctx.field().poly().to_hex()};
}

std::vector<TableEntry> table_entries(const ValueDistribution& dist) {
  const ParamSet& p = dist.params();
  const std::int64_t small = std::int64_t{1} << ((p.n + p.d) / 2);
  const std::int64_t large = std::int64_t{1} << ((p.n + 3 * p.d) / 2);
  std::vector<TableEntry> out;
  for (std::int64_t v : {small, -small, large, -large, std::int64_t{0}, std::int64_t{1} << p.n}) {
    out.push_back(TableEntry{v, dist.weight_of_value(v), dist.multiplicity(v).str()});
  }
  return out;
}

TableFormat parse_table_format(const std::string& s) {
  if (s == "pretty") return TableFormat::kPretty;
  if (s == "json") return TableFormat::kJson;
  if (s == "csv") return TableFormat::kCsv;
  throw Error(ErrorCode::kInvalidArgument, "unknown table format '" + s + "' (json, csv, pretty)");
}

std::string render_table(const ParamSet& p, const std::string& poly_hex, TableFormat format) {
  const ValueDistribution dist = closed_form_distribution(p);
  const auto rows = table_entries(dist);
  std::ostringstream os;
  switch (format) {
    case TableFormat::kJson: {
      nlohmann::json j;
      j["params"] = {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"s", p.s}, {"poly", poly_hex}};
      j["entries"] = nlohmann::json::array();
      for (const auto& e : rows) {
        j["entries"].push_back({{"value", e.value}, {"weight", e.weight}, {"multiplicity", e.multiplicity}});
      }
      j["total"] = dist.moment(0).str();
      os << j.dump(2) << '\n';
      break;
    }
    case TableFormat::kCsv:
      os << "value,weight,multiplicity\n";
      for (const auto& e : rows) {
        os << e.value << ',' << e.weight << ',' << e.multiplicity << '\n';
      }
      break;
    case TableFormat::kPretty: {
      std::size_t width = std::string("multiplicity").size();
      for (const auto& e : rows) {
        width = std::max(width, e.multiplicity.size());
      }
      os << "n=" << p.n << " k=" << p.k << " d=" << p.d << " s=" << p.s << " poly=" << poly_hex << '\n';
      os << std::setw(12) << "value" << "  " << std::setw(10) << "weight" << "  " << std::setw(static_cast<int>(width))
         << "multiplicity" << '\n';
      for (const auto& e : rows) {
        os << std::setw(12) << e.value << "  " << std::setw(10) << e.weight << "  "
           << std::setw(static_cast<int>(width)) << e.multiplicity << '\n';
      }
      os << "total " << dist.moment(0).str() << '\n';
      break;
    }
  }
  return os.str();
}

VerificationReport run_verify(const SumContext& ctx, const VerifyOptions& opts) {
  const auto start = Clock::now();
  const ParamSet& p = ctx.params();
  const Field& field = ctx.field();
  const std::uint32_t size = field.size();
  if (opts.exhaustive) {
    check_budget(p.n, opts.exec, "verify");
  }

  VerificationReport report;
  report.params = report_params(ctx);
  report.mode = opts.exhaustive ? "exhaustive" : "sampled";
  report.seed = opts.seed;
  report.samples = opts.exhaustive ? 0 : opts.samples;
  CheckRunner checks(report);
  std::mt19937_64 rng(opts.seed);
  const ExecOptions& exec = opts.exec;

  // Closed form.
  std::optional<ValueDistribution> closed;
  checks.run("closed_form.checksums", [&] {
    closed = closed_form_distribution(p);
    report.entries = table_entries(*closed);
    const auto failures = closed->checksum_failures();
    Outcome o;
    o.pass = failures.empty();
    o.expected = "total 2^3n, moments 2^3n, 2^4n, (2^(n+d)+2^n-2^d)2^3n";
    o.observed = failures.empty() ? "all hold" : failures.front();
    return o;
  });
  checks.run("closed_form.xi", [&] {
    const BigInt xi = xi_count(p);
    const BigInt zero_row = closed ? closed->multiplicity(0) : closed_form_distribution(p).multiplicity(0);
    return Outcome{xi == zero_row, zero_row.str(), xi.str()};
  });
  checks.run("closed_form.census_identities", [&] {
    const RankCensus c = closed_form_census(p);
    return Outcome{census_identities_hold(p, c), "n1+n3 = 2^2n-1, n1+2^2d n3 = 2^(n-d)(2^d+1)(2^n-1)",
                   render_census(c)};
  });

  const QuadForm form(ctx);

  if (opts.exhaustive) {
    std::optional<ValueDistribution> brute;
    checks.run("distribution.transform_vs_closed_form", [&] {
      brute = brute_force_distribution(ctx, exec);
      const ValueDistribution want = closed ? *closed : closed_form_distribution(p);
      return Outcome{*brute == want, render_map(want.entries()), render_map(brute->entries())};
    });
    checks.run("distribution.rank_vs_closed_form", [&] {
      const RankSweep sweep = rank_sweep(form, exec);
      const ValueDistribution want = closed ? *closed : closed_form_distribution(p);
      return Outcome{sweep.distribution == want, render_map(want.entries()), render_map(sweep.distribution.entries())};
    });
    checks.run("rank_census", [&] {
      const RankCensus got = rank_census(form, exec);
      const RankCensus want = closed_form_census(p);
      return Outcome{got == want && census_identities_hold(p, got), render_census(want), render_census(got)};
    });
    const std::pair<const char*, unsigned> moments[] = {
        {"moment.first", 1}, {"moment.second", 2}, {"moment.third", 3}};
    for (const auto& [name, order] : moments) {
      checks.run(name, [&, order = order] {
        if (!brute) {
          throw Error(ErrorCode::kInternal, "transform distribution unavailable");
        }
        const BigInt want = order == 1   ? pow2(3 * p.n)
                            : order == 2 ? pow2(4 * p.n)
                                         : third_moment_closed_form(p);
        const BigInt got = brute->moment(order);
        return Outcome{got == want, want.str(), got.str()};
      });
    }
    checks.run("five_weights", [&] {
      if (!brute) {
        throw Error(ErrorCode::kInternal, "transform distribution unavailable");
      }
      const unsigned got = brute->nonzero_weight_count();
      return Outcome{got == 5, "5", std::to_string(got)};
    });
  } else {
    checks.run("rank.sampled_dichotomy", [&] {
      const SampledRankCheck r = sampled_rank_check(form, opts.samples, opts.seed, exec);
      return Outcome{r.census.other == 0, "every rank in {s-1, s-3}",
                     std::to_string(r.samples) + " pairs: " + render_census(r.census)};
    });
  }

  if (p.n <= 13 || (exec.force && p.n <= 16)) {
    checks.run("m3_count", [&] {
      const std::uint64_t got = count_m3(ctx, exec);
      const std::uint64_t want = count_m3_closed_form(p);
      return Outcome{got == want, std::to_string(want), std::to_string(got)};
    });
  } else {
    checks.skip("m3_count", "n > 13; pass force to run up to n = 16");
  }

  // Per-pair gamma distribution against the rank prediction.
  {
    const std::uint64_t count = opts.exhaustive ? 1000 : std::min<std::uint64_t>(opts.samples, 1000);
    const auto pairs = random_pairs(rng, size, count);
    checks.run("gamma.predicted_vs_transform", [&] {
      const std::uint64_t bad = parallel_reduce<std::uint64_t>(
          pairs.size(), exec.threads,
          [&](std::uint64_t& acc, std::uint64_t i) {
            const auto [a, b] = pairs[i];
            if (!matches(form.predict_gamma_distribution(a, b), ctx.eval_sum_all_gamma(a, b))) {
              ++acc;
            }
          },
          [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
      return Outcome{bad == 0, "0 mismatches over " + std::to_string(pairs.size()) + " pairs",
                     std::to_string(bad) + " mismatches"};
    });
    const std::uint64_t direct_pairs = std::min<std::uint64_t>(pairs.size(), 100);
    checks.run("gamma.transform_vs_direct", [&] {
      std::uint64_t bad = 0;
      std::string detail;
      if (p.n <= 9) {
        for (std::uint64_t i = 0; i < direct_pairs; ++i) {
          const auto [a, b] = pairs[i];
          ValueCounts direct;
          for (Elem g = 0; g < size; ++g) {
            ++direct[ctx.eval_sum(a, b, g)];
          }
          bad += direct != ctx.eval_sum_all_gamma(a, b);
        }
        detail = "full gamma multisets on " + std::to_string(direct_pairs) + " pairs";
      } else {
        for (std::uint64_t i = 0; i < direct_pairs; ++i) {
          const auto [a, b] = pairs[i];
          const auto spectrum = ctx.gamma_spectrum(a, b);
          for (int t = 0; t < 4; ++t) {
            const auto g = static_cast<Elem>(rng() & (size - 1));
            bad += spectrum[ctx.functional_mask(g)] != ctx.eval_sum(a, b, g);
          }
        }
        detail = "4 point queries on each of " + std::to_string(direct_pairs) + " pairs";
      }
      return Outcome{bad == 0, "0 mismatches (" + detail + ")", std::to_string(bad) + " mismatches"};
    });
  }

  // Code.
  std::optional<CyclicCode> code;
  checks.run("code.structure", [&] {
    code = CyclicCode::build(ctx);
    const auto& s = code->spec();
    const bool ok = s.length == field.order() && s.dimension == 3 * p.n &&
                    s.parity_check.degree() == static_cast<int>(3 * p.n);
    return Outcome{ok, "length " + std::to_string(field.order()) + ", dimension " + std::to_string(3 * p.n),
                   "length " + std::to_string(s.length) + ", dimension " + std::to_string(s.dimension) + ", h = " +
                       s.h1.to_hex() + "*" + s.h2.to_hex() + "*" + s.h3.to_hex()};
  });
  if (code) {
    if (opts.exhaustive) {
      checks.run("code.weight_distribution", [&] {
        const auto want = (closed ? *closed : closed_form_distribution(p)).weights();
        const auto got = code->weight_distribution(exec);
        return Outcome{got == want, render_map(want), render_map(got)};
      });
      if (p.n <= 7) {
        checks.run("code.direct_weight_distribution", [&] {
          const auto want = (closed ? *closed : closed_form_distribution(p)).weights();
          const auto got = code->direct_weight_distribution(exec);
          return Outcome{got == want, render_map(want), render_map(got)};
        });
      }
    }
    checks.run("code.weight_of_vs_hamming", [&] {
      std::vector<Label> labels;
      if (opts.exhaustive && p.n <= 5) {
        for (std::uint64_t i = 0; i < std::uint64_t{size} * size * size; ++i) {
          labels.push_back(Label{static_cast<Elem>(i / (std::uint64_t{size} * size)),
                                 static_cast<Elem>((i / size) % size), static_cast<Elem>(i % size)});
        }
      } else {
        const std::uint64_t count = p.n <= 11 ? 10000 : 200;
        for (std::uint64_t i = 0; i < count; ++i) {
          labels.push_back(random_label(rng, size));
        }
      }
      const std::uint64_t bad = parallel_reduce<std::uint64_t>(
          labels.size(), exec.threads,
          [&](std::uint64_t& acc, std::uint64_t i) {
            acc += code->weight_of(labels[i]) != static_cast<std::int64_t>(code->codeword(labels[i]).weight());
          },
          [](std::uint64_t& into, const std::uint64_t& from) { into += from; });
      return Outcome{bad == 0, "0 mismatches over " + std::to_string(labels.size()) + " labels",
                     std::to_string(bad) + " mismatches"};
    });
    checks.run("code.linearity_shift_zeroes", [&] {
      const Elem zeroes[3] = {field.generator(), field.exp(static_cast<std::int64_t>(p.gold_exponent())),
                              field.exp(static_cast<std::int64_t>(p.quad_exponent()))};
      std::uint64_t bad = 0;
      const int trials = p.n <= 11 ? 100 : 10;
      for (int t = 0; t < trials; ++t) {
        const Label l1 = random_label(rng, size);
        const Label l2 = random_label(rng, size);
        const Codeword c1 = code->codeword(l1);
        const Codeword c2 = code->codeword(l2);
        const Label sum{l1.alpha ^ l2.alpha, l1.beta ^ l2.beta, l1.gamma ^ l2.gamma};
        bad += !(c1 ^ c2).same_bits(code->codeword(sum));
        bad += !c1.rotated(1).same_bits(code->codeword(code->shift_label(l1)));
        for (Elem z : zeroes) {
          bad += code->evaluate(c1, z) != 0;
        }
      }
      return Outcome{bad == 0, "0 violations over " + std::to_string(trials) + " label pairs",
                     std::to_string(bad) + " violations"};
    });
  }

  // Correlation.
  const SequenceFamily family(ctx);
  checks.run("correlation.reduced_vs_direct", [&] {
    std::uint64_t bad = 0;
    const int trials = p.n <= 11 ? 100 : 20;
    for (int t = 0; t < trials; ++t) {
      const auto a = SequenceId::f1(static_cast<Elem>(rng() & (size - 1)), static_cast<Elem>(rng() & (size - 1)));
      const auto b = SequenceId::f1(static_cast<Elem>(rng() & (size - 1)), static_cast<Elem>(rng() & (size - 1)));
      const auto tau = static_cast<std::uint32_t>(rng() % family.period());
      bad += family.correlate_reduced(a, b, tau) != family.correlate_direct(a, b, tau);
    }
    return Outcome{bad == 0, "0 mismatches over " + std::to_string(trials) + " (pair, shift) draws",
                   std::to_string(bad) + " mismatches"};
  });
  checks.run("correlation.value_set", [&] {
    const auto predicted = family.predicted_values();
    if (opts.exhaustive && family.period() <= 64) {
      const CorrelationSweep sweep = family.sweep_exhaustive(false, exec);
      const auto got = sweep.values();
      return Outcome{got == predicted, render_set(predicted), render_set(got) + " (exhaustive F1 x F1)"};
    }
    const std::uint64_t count = p.n <= 11 ? std::min<std::uint64_t>(opts.samples, 10000) : 500;
    const CorrelationSweep sweep = family.sweep_sampled(count, opts.seed, false, exec);
    const auto got = sweep.values();
    const bool subset = std::includes(predicted.begin(), predicted.end(), got.begin(), got.end());
    return Outcome{subset, "subset of " + render_set(predicted),
                   render_set(got) + " (" + std::to_string(count) + " sampled)"};
  });

  report.elapsed_ms = ms_since(start);
  return report;
}

}  // namespace fivew
