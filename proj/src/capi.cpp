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

#include "fivew/fivew.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "fivew/codes.hpp"
#include "fivew/error.hpp"
#include "fivew/expsum.hpp"
#include "fivew/gf2n.hpp"
#include "fivew/quadform.hpp"
#include "fivew/report.hpp"
#include "fivew/sequences.hpp"

struct fivew_context {
  fivew::SumContext sums;
};

namespace {

thread_local std::string g_last_error;

fivew_status set_error(fivew_status status, const std::string& message) {
  g_last_error = std::string(fivew_status_name(status)) + ": " + message;
  return status;
}

// Runs body, mapping library exceptions onto status codes.
template <typename Body>
fivew_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const fivew::Error& e) {
    return set_error(static_cast<fivew_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(FIVEW_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(FIVEW_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(FIVEW_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (p == nullptr) {
    throw fivew::Error(fivew::ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
  }
}

void require_element(const fivew::Field& f, uint32_t a) {
  if (!f.contains(a)) {
    throw fivew::Error(fivew::ErrorCode::kInvalidArgument,
                       "element " + fivew::elem_to_hex(a) + " outside GF(2^" + std::to_string(f.degree()) + ")");
  }
}

std::optional<fivew::BinaryPoly> poly_arg(uint32_t poly) {
  if (poly == 0) {
    return std::nullopt;
  }
  return fivew::BinaryPoly(poly);
}

fivew::VerifyOptions verify_options(const fivew_options* opts) {
  fivew_options o;
  fivew_options_init(&o);
  if (opts) {
    o = *opts;
  }
  fivew::VerifyOptions v;
  v.exhaustive = o.exhaustive != 0;
  v.samples = o.samples == 0 ? fivew::kDefaultSamples : o.samples;
  v.seed = o.seed;
  v.exec.threads = o.threads;
  v.exec.force = o.force != 0;
  return v;
}

nlohmann::json params_json(const fivew::SumContext& ctx) {
  const auto& p = ctx.params();
  return {{"n", p.n}, {"k", p.k}, {"d", p.d}, {"s", p.s}, {"poly", ctx.field().poly().to_hex()}};
}

}  // namespace

extern "C" {

FIVEW_API void fivew_options_init(fivew_options* opts) {
  if (!opts) {
    return;
  }
  opts->exhaustive = 0;
  opts->samples = fivew::kDefaultSamples;
  opts->seed = fivew::kDefaultSeed;
  opts->threads = 0;
  opts->force = 0;
}

FIVEW_API const char* fivew_status_name(fivew_status status) {
  if (status == FIVEW_OK) {
    return "OK";
  }
  if (status == FIVEW_ERR_VERIFICATION_FAILED) {
    return "VerificationFailed";
  }
  return fivew::error_name(static_cast<fivew::ErrorCode>(status));
}

FIVEW_API const char* fivew_last_error(void) { return g_last_error.c_str(); }

FIVEW_API void fivew_string_free(char* s) { std::free(s); }

FIVEW_API fivew_status fivew_field_info(unsigned n, uint32_t poly, char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = nullptr;
    const fivew::Field f = fivew::Field::build(n, poly_arg(poly));
    nlohmann::json j;
    j["n"] = n;
    j["poly"] = f.poly().to_hex();
    j["poly_text"] = f.poly().to_string();
    j["default_poly"] = fivew::default_primitive_poly(n).to_hex();
    j["order"] = std::to_string(f.order());
    j["order_factors"] = nlohmann::json::array();
    for (auto p : fivew::prime_factors(f.order())) {
      j["order_factors"].push_back(std::to_string(p));
    }
    j["order_check"] = "PASS";
    j["tables"] = f.has_tables();
    *json_out = dup_string(j.dump(2));
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_context_create(unsigned n, unsigned k, uint32_t poly, fivew_context** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const fivew::ParamSet params = fivew::ParamSet::make(n, k);
    fivew::Field field = fivew::Field::build(n, poly_arg(poly));
    *out = new fivew_context{fivew::SumContext(std::move(field), params)};
    return FIVEW_OK;
  });
}

FIVEW_API void fivew_context_destroy(fivew_context* ctx) { delete ctx; }

FIVEW_API fivew_status fivew_context_params(const fivew_context* ctx, fivew_params* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const auto& p = ctx->sums.params();
    *out = fivew_params{p.n, p.k, p.d, p.s, p.q0, static_cast<uint32_t>(ctx->sums.field().poly().mask())};
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_mul(const fivew_context* ctx, uint32_t a, uint32_t b, uint32_t* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    const auto& f = ctx->sums.field();
    require_element(f, a);
    require_element(f, b);
    *out = f.mul(a, b);
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_inv(const fivew_context* ctx, uint32_t a, uint32_t* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    require_element(ctx->sums.field(), a);
    *out = ctx->sums.field().inv(a);
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_trace(const fivew_context* ctx, uint32_t a, unsigned* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    require_element(ctx->sums.field(), a);
    *out = ctx->sums.field().abs_trace(a);
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_eval(const fivew_context* ctx, uint32_t a, uint32_t b, uint32_t g, int64_t* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = ctx->sums.eval_sum(a, b, g);
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_rank(const fivew_context* ctx, uint32_t a, uint32_t b, fivew_rank_info* out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    require_element(ctx->sums.field(), a);
    require_element(ctx->sums.field(), b);
    const fivew::QuadForm form(ctx->sums);
    const fivew::RankResult r = form.kernel_dim(a, b);
    const fivew::GammaDistribution g = fivew::gamma_distribution_for_rank(ctx->sums.params(), r.rank_r);
    *out = fivew_rank_info{r.kernel_dim_m, r.rank_r, g.magnitude, g.count_zero, g.count_plus, g.count_minus};
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_table(const fivew_context* ctx, fivew_format format, char** out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(out, "out");
    *out = nullptr;
    fivew::TableFormat f = fivew::TableFormat::kPretty;
    switch (format) {
      case FIVEW_FORMAT_PRETTY: f = fivew::TableFormat::kPretty; break;
      case FIVEW_FORMAT_JSON: f = fivew::TableFormat::kJson; break;
      case FIVEW_FORMAT_CSV: f = fivew::TableFormat::kCsv; break;
      default: throw fivew::Error(fivew::ErrorCode::kInvalidArgument, "unknown table format");
    }
    *out = dup_string(fivew::render_table(ctx->sums.params(), ctx->sums.field().poly().to_hex(), f));
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_verify(const fivew_context* ctx, const fivew_options* opts, char** report_json) {
  return guarded([&] {
    require(ctx, "ctx");
    require(report_json, "report_json");
    *report_json = nullptr;
    const fivew::VerificationReport report = fivew::run_verify(ctx->sums, verify_options(opts));
    *report_json = dup_string(report.to_json().dump(2));
    if (!report.pass()) {
      return set_error(FIVEW_ERR_VERIFICATION_FAILED, "one or more checks failed");
    }
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_code_weights(const fivew_context* ctx, const fivew_options* opts, char** json_out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(json_out, "json_out");
    *json_out = nullptr;
    const fivew::VerifyOptions v = verify_options(opts);
    const fivew::CyclicCode code = fivew::CyclicCode::build(ctx->sums);
    const fivew::ValueDistribution closed = fivew::closed_form_distribution(ctx->sums.params());
    const auto want = closed.weights();
    nlohmann::json j;
    j["params"] = params_json(ctx->sums);
    j["length"] = code.spec().length;
    j["dimension"] = code.spec().dimension;
    j["parity_check"] = {code.spec().h1.to_hex(), code.spec().h2.to_hex(), code.spec().h3.to_hex()};
    j["mode"] = v.exhaustive ? "exhaustive" : "closed_form";
    auto got = want;
    if (v.exhaustive) {
      fivew::check_budget(ctx->sums.params().n, v.exec, "code-weights");
      got = code.weight_distribution(v.exec);
      j["matches_closed_form"] = got == want;
    }
    j["weights"] = nlohmann::json::array();
    for (const auto& [w, c] : got) {
      j["weights"].push_back({{"weight", w}, {"count", c.str()}});
    }
    *json_out = dup_string(j.dump(2));
    if (v.exhaustive && got != want) {
      return set_error(FIVEW_ERR_VERIFICATION_FAILED, "enumerated weight distribution differs from closed form");
    }
    return FIVEW_OK;
  });
}

FIVEW_API fivew_status fivew_correlations(const fivew_context* ctx, const fivew_options* opts, const char* csv_path,
                                          char** json_out) {
  return guarded([&] {
    require(ctx, "ctx");
    require(json_out, "json_out");
    *json_out = nullptr;
    const fivew::VerifyOptions v = verify_options(opts);
    const fivew::SequenceFamily family(ctx->sums);
    fivew::CorrelationSweep sweep;
    if (v.exhaustive) {
      if (csv_path) {
        throw fivew::Error(fivew::ErrorCode::kInvalidArgument, "CSV export is available for sampled sweeps only");
      }
      sweep = family.sweep_exhaustive(true, v.exec);
    } else {
      sweep = family.sweep_sampled(v.samples, v.seed, csv_path != nullptr, v.exec);
    }
    if (csv_path) {
      std::ofstream out(csv_path);
      if (!out) {
        throw fivew::Error(fivew::ErrorCode::kIoError, std::string("cannot open ") + csv_path);
      }
      fivew::write_correlation_csv(out, sweep.records);
      if (!out) {
        throw fivew::Error(fivew::ErrorCode::kIoError, std::string("write failed for ") + csv_path);
      }
    }
    const auto predicted = family.predicted_values();
    const auto values = sweep.values();
    bool subset = true;
    for (auto x : values) {
      subset = subset && predicted.count(x) != 0;
    }
    nlohmann::json j;
    j["params"] = params_json(ctx->sums);
    j["mode"] = v.exhaustive ? "exhaustive" : "sampled";
    j["seed"] = std::to_string(v.seed);
    j["family_size"] = std::to_string(family.family_size());
    j["evaluated"] = std::to_string(sweep.evaluated);
    j["predicted"] = predicted;
    j["values"] = values;
    j["within_predicted"] = subset;
    j["distribution_note"] = "empirical counts; no closed-form correlation distribution is claimed";
    j["distribution"] = nlohmann::json::array();
    for (const auto& [value, count] : sweep.distribution) {
      j["distribution"].push_back({{"value", value}, {"count", std::to_string(count)}});
    }
    *json_out = dup_string(j.dump(2));
    if (!subset) {
      return set_error(FIVEW_ERR_VERIFICATION_FAILED, "correlation value outside the predicted set");
    }
    return FIVEW_OK;
  });
}

}  // extern "C"
