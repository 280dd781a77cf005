/*
 * Copyright 2026 The pnspace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the pnspace library. Every function returns a pns_status;
 * on failure pns_last_error_message() describes the error for the calling
 * thread. Objects returned through out-parameters are owned by the caller
 * and released with the matching *_free function.
 */

#ifndef PNSPACE_PNSPACE_H
#define PNSPACE_PNSPACE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PNS_BUILDING_LIBRARY)
#    define PNS_API __declspec(dllexport)
#  else
#    define PNS_API __declspec(dllimport)
#  endif
#else
#  define PNS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pns_status {
  PNS_OK = 0,
  PNS_ERR_INVALID_ARGUMENT = 1,
  PNS_ERR_PARSE = 2,
  PNS_ERR_UNSUPPORTED = 3,
  PNS_ERR_INCONCLUSIVE = 4,
  PNS_ERR_IO = 5,
  PNS_ERR_INTERNAL = 6
} pns_status;

/* Distribution function in Delta+ (finite step function). */
typedef struct pns_df pns_df;
/* Probabilistic normed space loaded from a space file, with optional subspace. */
typedef struct pns_space pns_space;

PNS_API const char* pns_version(void);
PNS_API const char* pns_last_error_message(void);

/* Strings returned by the library. */
PNS_API void pns_string_free(char* s);

PNS_API pns_status pns_df_parse(const char* text, pns_df** out);
PNS_API pns_status pns_df_load(const char* path, pns_df** out);
PNS_API pns_status pns_df_unit_step(double a, pns_df** out);
/* F = values[i] on (at[i], at[i+1]]; at strictly increasing, values increasing. */
PNS_API pns_status pns_df_from_steps(const double* at, const double* values, size_t n,
                                     pns_df** out);
PNS_API void pns_df_free(pns_df* f);
PNS_API pns_status pns_df_eval(const pns_df* f, double x, double* out);
/* DF v1 text; free with pns_string_free. */
PNS_API pns_status pns_df_to_text(const pns_df* f, char** out);
PNS_API pns_status pns_df_equal(const pns_df* f, const pns_df* g, int* out);

PNS_API pns_status pns_sibley(const pns_df* f, const pns_df* g, double* out);
PNS_API pns_status pns_sibley_to_eps0(const pns_df* f, double* out);

/* triangle: "tau_T:min", "tau_T*:prod", "tau_M", "tau_M*", ... */
PNS_API pns_status pns_tau(const char* triangle, const pns_df* f, const pns_df* g,
                           pns_df** out);

/* norm: "l1", "l2", "linf". basis holds nbasis row vectors of length dim. */
PNS_API pns_status pns_dist_to_subspace(const char* norm, const double* point, size_t dim,
                                        const double* basis, size_t nbasis, double* out);

PNS_API pns_status pns_space_load(const char* path, pns_space** out);
PNS_API void pns_space_free(pns_space* s);
/* "c00-sum-kernel" or "1 0 0; 0 1 0". */
PNS_API pns_status pns_space_set_subspace(pns_space* s, const char* subspace);
/* 0 for c00. */
PNS_API pns_status pns_space_dim(const pns_space* s, size_t* out);
PNS_API pns_status pns_space_norm(const pns_space* s, const double* p, size_t n,
                                  pns_df** out);
/* Exact strategy for unit-step spaces with a basis subspace, sampled otherwise. */
PNS_API pns_status pns_quotient_norm(const pns_space* s, const double* p, size_t n,
                                     pns_df** out);

typedef struct pns_suite_config {
  const char* space_path;
  const char* subspace; /* NULL or "" keeps the space file's subspace */
  const char* const* suites;
  size_t n_suites;
  size_t samples;
  uint64_t seed;
  size_t horizon;
  double tol;
  int timing;
} pns_suite_config;

/* Runs the suites (all of them when n_suites is 0); report_json (free with pns_string_free) receives the JSON
 * report and exit_code 0 (pass), 1 (fail) or 2 (inconclusive). */
PNS_API pns_status pns_run_suite(const pns_suite_config* config, char** report_json,
                                 int* exit_code);

#ifdef __cplusplus
}
#endif

#endif /* PNSPACE_PNSPACE_H */
