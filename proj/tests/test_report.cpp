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

#include "fivew/error.hpp"
#include "fivew/report.hpp"

using namespace fivew;

namespace {

SumContext make_ctx(unsigned n, unsigned k) { return SumContext(Field::build(n), ParamSet::make(n, k)); }

// Timings are the only nondeterministic fields.
VerificationReport without_timings(VerificationReport r) {
  r.elapsed_ms = 0;
  for (auto& c : r.checks) {
    c.elapsed_ms = 0;
  }
  return r;
}

}  // namespace

TEST_CASE("exhaustive report at n = 5 passes") {
  VerifyOptions opts;
  opts.exhaustive = true;
  const VerificationReport r = run_verify(make_ctx(5, 1), opts);
  CHECK(r.pass());
  CHECK(r.mode == "exhaustive");
  CHECK(r.params == ReportParams{5, 1, 1, 5, "0x25"});
  for (const auto& c : r.checks) {
    CAPTURE(c.name);
    CHECK(c.status == CheckStatus::kPass);
  }
  REQUIRE(r.entries.size() == 6);
  CHECK(r.entries[0] == TableEntry{8, 12, "8680"});
  CHECK(r.entries[5] == TableEntry{32, 0, "1"});
}

TEST_CASE("json round trip") {
  VerifyOptions opts;
  opts.samples = 300;
  opts.seed = 17;
  const VerificationReport r = run_verify(make_ctx(7, 2), opts);
  const nlohmann::json j = r.to_json();
  CHECK(j["mode"] == "sampled");
  CHECK(j["seed"] == "17");
  CHECK(j["params"]["poly"] == "0x83");
  CHECK(VerificationReport::from_json(j) == r);
  CHECK(VerificationReport::from_json(nlohmann::json::parse(j.dump())) == r);
}

TEST_CASE("reports are deterministic given params, mode and seed") {
  VerifyOptions opts;
  opts.samples = 500;
  opts.seed = 3;
  const SumContext ctx = make_ctx(9, 2);
  const VerificationReport first = without_timings(run_verify(ctx, opts));
  CHECK(first == without_timings(run_verify(ctx, opts)));
  opts.exec.threads = 3;
  CHECK(first == without_timings(run_verify(ctx, opts)));
}

TEST_CASE("pass requires at least one check and no failures") {
  VerificationReport r;
  CHECK_FALSE(r.pass());
  r.checks.push_back({"a", CheckStatus::kSkip, "", "", 0});
  CHECK_FALSE(r.pass());
  r.checks.push_back({"b", CheckStatus::kPass, "", "", 0});
  CHECK(r.pass());
  r.checks.push_back({"c", CheckStatus::kFail, "", "", 0});
  CHECK_FALSE(r.pass());
}

TEST_CASE("status names") {
  for (auto s : {CheckStatus::kPass, CheckStatus::kFail, CheckStatus::kSkip}) {
    CHECK(parse_status(status_name(s)) == s);
  }
}

TEST_CASE("table rendering") {
  const std::string pretty = render_table(ParamSet::make(5, 1), "0x25", TableFormat::kPretty);
  CHECK(pretty.find("18259") != std::string::npos);
  CHECK(pretty.find("32768") != std::string::npos);

  const auto j = nlohmann::json::parse(render_table(ParamSet::make(5, 1), "0x25", TableFormat::kJson));
  REQUIRE(j["entries"].size() == 6);
  CHECK(j["entries"][4]["multiplicity"] == "18259");

  const std::string csv = render_table(ParamSet::make(5, 1), "0x25", TableFormat::kCsv);
  CHECK(csv.find("value,weight,multiplicity\n") == 0);
  CHECK(csv.find("-16,24,155\n") != std::string::npos);

  const std::string big = render_table(ParamSet::make(23, 1), "0x800021", TableFormat::kCsv);
  CHECK(big.find("0,4194304,332041380132637638655\n") != std::string::npos);

  CHECK(parse_table_format("csv") == TableFormat::kCsv);
  try {
    parse_table_format("xml");
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidArgument);
  }
}
