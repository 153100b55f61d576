/*
 * Copyright 2026 The fivew Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libfivew.
 *
 * Every function returns a fivew_status. On failure a human-readable
 * message for the calling thread is available from fivew_last_error().
 * Strings returned through char** out-parameters are heap allocated and
 * must be released with fivew_string_free().
 *
 * Field elements and polynomials cross this boundary as bit masks
 * (bit i = coefficient of x^i). Large counts are decimal strings inside
 * the returned JSON documents.
 */

#ifndef FIVEW_H
#define FIVEW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FIVEW_API __declspec(dllexport)
#else
#define FIVEW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fivew_status {
  FIVEW_OK = 0,
  FIVEW_ERR_UNSUPPORTED_DEGREE = 1,
  FIVEW_ERR_NON_PRIMITIVE_POLYNOMIAL = 2,
  FIVEW_ERR_DIVISION_BY_ZERO = 3,
  FIVEW_ERR_INVALID_SUBFIELD = 4,
  FIVEW_ERR_INVALID_PARAMS = 5,
  FIVEW_ERR_ZERO_FORM = 6,
  FIVEW_ERR_INVALID_RANK = 7,
  FIVEW_ERR_INEXACT_MULTIPLICITY = 8,
  FIVEW_ERR_DEGENERATE_CODE = 9,
  FIVEW_ERR_BUDGET_EXCEEDED = 10,
  FIVEW_ERR_INVALID_ARGUMENT = 11,
  FIVEW_ERR_IO = 12,
  FIVEW_ERR_INTERNAL = 13,
  /* The operation completed but at least one verification check failed. */
  FIVEW_ERR_VERIFICATION_FAILED = 14
} fivew_status;

typedef enum fivew_format {
  FIVEW_FORMAT_PRETTY = 0,
  FIVEW_FORMAT_JSON = 1,
  FIVEW_FORMAT_CSV = 2
} fivew_format;

/* GF(2^n) together with (n, k). Immutable; safe to share across threads. */
typedef struct fivew_context fivew_context;

typedef struct fivew_params {
  unsigned n;
  unsigned k;
  unsigned d;
  unsigned s;
  uint32_t q0;
  uint32_t poly;
} fivew_params;

typedef struct fivew_rank_info {
  unsigned kernel_dim;
  unsigned rank;
  int64_t magnitude;
  uint64_t count_zero;
  uint64_t count_plus;
  uint64_t count_minus;
} fivew_rank_info;

typedef struct fivew_options {
  int exhaustive;
  uint64_t samples; /* 0 selects the default */
  uint64_t seed;
  unsigned threads; /* 0 selects hardware concurrency */
  int force;        /* lift the exhaustive work budget */
} fivew_options;

FIVEW_API void fivew_options_init(fivew_options* opts);

FIVEW_API const char* fivew_status_name(fivew_status status);
FIVEW_API const char* fivew_last_error(void);
FIVEW_API void fivew_string_free(char* s);

/* poly = 0 selects the built-in default for degree n. Writes a JSON
 * document {n, poly, poly_text, order, order_factors, order_check}. */
FIVEW_API fivew_status fivew_field_info(unsigned n, uint32_t poly, char** json_out);

FIVEW_API fivew_status fivew_context_create(unsigned n, unsigned k, uint32_t poly, fivew_context** out);
FIVEW_API void fivew_context_destroy(fivew_context* ctx);
FIVEW_API fivew_status fivew_context_params(const fivew_context* ctx, fivew_params* out);

/* Field arithmetic on the context's field. */
FIVEW_API fivew_status fivew_mul(const fivew_context* ctx, uint32_t a, uint32_t b, uint32_t* out);
FIVEW_API fivew_status fivew_inv(const fivew_context* ctx, uint32_t a, uint32_t* out);
FIVEW_API fivew_status fivew_trace(const fivew_context* ctx, uint32_t a, unsigned* out);

/* S(a, b, g) by direct enumeration. */
FIVEW_API fivew_status fivew_eval(const fivew_context* ctx, uint32_t a, uint32_t b, uint32_t g, int64_t* out);
/* Kernel dimension, rank and predicted gamma distribution for (a, b) != (0, 0). */
FIVEW_API fivew_status fivew_rank(const fivew_context* ctx, uint32_t a, uint32_t b, fivew_rank_info* out);

/* Closed-form value/weight/multiplicity table. */
FIVEW_API fivew_status fivew_table(const fivew_context* ctx, fivew_format format, char** out);

/* Runs the verification pipeline and writes the JSON report. Returns
 * FIVEW_ERR_VERIFICATION_FAILED (with the report still written) when any
 * check failed. */
FIVEW_API fivew_status fivew_verify(const fivew_context* ctx, const fivew_options* opts, char** report_json);

/* Weight enumerator as JSON {params, mode, weights: [{weight, count}]}.
 * Exhaustive uses the full value distribution; otherwise the closed form. */
FIVEW_API fivew_status fivew_code_weights(const fivew_context* ctx, const fivew_options* opts, char** json_out);

/* Correlation sweep; JSON {mode, seed, evaluated, predicted, values,
 * distribution}. When csv_path is non-NULL every evaluated (pair, shift)
 * is written there (sampled mode only). */
FIVEW_API fivew_status fivew_correlations(const fivew_context* ctx, const fivew_options* opts, const char* csv_path,
                                          char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* FIVEW_H */
