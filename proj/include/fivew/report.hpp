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

// Verification pipeline and machine-readable reports.
//
// JSON layout:
//   {params: {n, k, d, s, poly}, mode, seed, samples,
//    checks: [{name, status, expected, observed, elapsed_ms}],
//    entries: [{value, weight, multiplicity}], elapsed_ms, status}
// Counts and multiplicities are decimal strings.

#ifndef FIVEW_REPORT_HPP
#define FIVEW_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fivew/distribution.hpp"
#include "fivew/expsum.hpp"

namespace fivew {

constexpr std::uint64_t kDefaultSeed = 1;
constexpr std::uint64_t kDefaultSamples = 10000;

enum class CheckStatus { kPass, kFail, kSkip };

const char* status_name(CheckStatus s);
CheckStatus parse_status(const std::string& s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kFail;
  std::string expected;
  std::string observed;
  std::int64_t elapsed_ms = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct TableEntry {
  std::int64_t value = 0;
  std::int64_t weight = 0;
  std::string multiplicity;

  friend bool operator==(const TableEntry&, const TableEntry&) = default;
};

struct ReportParams {
  unsigned n = 0;
  unsigned k = 0;
  unsigned d = 0;
  unsigned s = 0;
  std::string poly;

  friend bool operator==(const ReportParams&, const ReportParams&) = default;
};

struct VerificationReport {
  ReportParams params;
  std::string mode;  // "exhaustive" or "sampled"
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t samples = 0;
  std::vector<CheckResult> checks;
  std::vector<TableEntry> entries;
  std::int64_t elapsed_ms = 0;

  // Every non-skipped check passed and at least one ran.
  bool pass() const;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  bool exhaustive = false;
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  ExecOptions exec;
};

// Module errors become FAIL entries; only a budget violation for an
// explicitly requested exhaustive run is thrown.
VerificationReport run_verify(const SumContext& ctx, const VerifyOptions& opts);

ReportParams report_params(const SumContext& ctx);

// Closed-form rows in table order: +small, -small, +large, -large, 0, 2^n.
std::vector<TableEntry> table_entries(const ValueDistribution& dist);

enum class TableFormat { kPretty, kJson, kCsv };
TableFormat parse_table_format(const std::string& s);
std::string render_table(const ParamSet& p, const std::string& poly_hex, TableFormat format);

}  // namespace fivew

#endif  // FIVEW_REPORT_HPP
