// Copyright 2026 The challenge-judge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef CHALLENGE_JUDGE_H_
#define CHALLENGE_JUDGE_H_

/*
 * C interface to the challenge-judge library: paired bootstrap comparison of
 * challenge submissions against a single gold standard.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns a cj_status; on failure a human-readable
 * message is available from cj_last_error_message() on the calling thread
 * until the next failing call on that thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CJ_BUILDING_LIBRARY)
#    define CJ_API __declspec(dllexport)
#  else
#    define CJ_API __declspec(dllimport)
#  endif
#else
#  define CJ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cj_status {
  CJ_OK = 0,
  CJ_ERR_INVALID_ARGUMENT = 1,
  CJ_ERR_LENGTH_MISMATCH = 2,
  CJ_ERR_MISSING_COLUMN = 3,
  CJ_ERR_DUPLICATE_COLUMN = 4,
  CJ_ERR_DUPLICATE_ID = 5,
  CJ_ERR_EMPTY_CELL = 6,
  CJ_ERR_MALFORMED_INPUT = 7,
  CJ_ERR_UNKNOWN_POSITIVE_LABEL = 8,
  CJ_ERR_UNKNOWN_TEAM = 9,
  CJ_ERR_COUNT_OUT_OF_RANGE = 10,
  CJ_ERR_PLAN_MISMATCH = 11,
  CJ_ERR_TOO_FEW_TEAMS = 12,
  CJ_ERR_NEGATIVE_DELTA = 13,
  CJ_ERR_IO = 14,
  CJ_ERR_INTERNAL = 15
} cj_status;

typedef enum cj_metric {
  CJ_METRIC_PRECISION = 0,
  CJ_METRIC_RECALL = 1,
  CJ_METRIC_F1 = 2
} cj_metric;

/* Bit masks for cj_analysis_options.metrics. */
#define CJ_MASK(metric) (1u << (metric))
#define CJ_METRICS_ALL 7u

typedef struct cj_dataset cj_dataset;
typedef struct cj_report cj_report;

CJ_API const char* cj_version(void);
CJ_API const char* cj_status_name(cj_status status);
CJ_API const char* cj_last_error_message(void);

/* --- datasets ----------------------------------------------------------- */

/* Wide CSV "id,gold,<team...>"; positive is the positive-class token. */
CJ_API cj_status cj_dataset_load_csv(const char* path, const char* positive, cj_dataset** out);
/* Builds a dataset from a JSON reconstruction spec file or string. */
CJ_API cj_status cj_dataset_reconstruct(const char* spec_path, uint64_t seed, cj_dataset** out);
CJ_API cj_status cj_dataset_reconstruct_json(const char* spec_json, uint64_t seed,
                                             cj_dataset** out);
CJ_API cj_status cj_dataset_save_csv(const cj_dataset* ds, const char* path);
CJ_API void cj_dataset_free(cj_dataset* ds);

CJ_API size_t cj_dataset_size(const cj_dataset* ds);
CJ_API size_t cj_dataset_team_count(const cj_dataset* ds);
/* NULL when index is out of range. Owned by the dataset. */
CJ_API const char* cj_dataset_team_name(const cj_dataset* ds, size_t index);
CJ_API const char* cj_dataset_positive(const cj_dataset* ds);
/* counts receives tp, fp, fn, tn. */
CJ_API cj_status cj_dataset_confusion(const cj_dataset* ds, size_t team, uint64_t counts[4]);
/* Full-dataset score; *defined is 0 when the metric's denominator is zero. */
CJ_API cj_status cj_dataset_score(const cj_dataset* ds, size_t team, cj_metric metric,
                                  double* value, int* defined);

/* --- analysis ----------------------------------------------------------- */

typedef struct cj_analysis_options {
  uint32_t replicates; /* bootstrap replicates, >= 1 (default 10000) */
  uint64_t seed;       /* default 42 */
  double level;        /* confidence level in (0, 1) (default 0.95) */
  unsigned metrics;    /* CJ_MASK bits (default CJ_METRICS_ALL) */
  unsigned threads;    /* 0: hardware parallelism; results never depend on it */
  const char* pairs;   /* "A:B,C:D" histogram pairs, or NULL for the default */
} cj_analysis_options;

CJ_API void cj_analysis_options_init(cj_analysis_options* options);
CJ_API cj_status cj_analyze(const cj_dataset* ds, const cj_analysis_options* options,
                            cj_report** out);
CJ_API void cj_report_free(cj_report* report);

/* Canonical report.json text, owned by the report. */
CJ_API const char* cj_report_json(const cj_report* report);
/* Writes report.json, tables, and SVG figures into dir (created if needed). */
CJ_API cj_status cj_report_emit(const cj_report* report, const char* dir);

/* --- utilities ---------------------------------------------------------- */

/* Lower-case hex SHA-256 of a file's bytes; hex must hold 65 chars. */
CJ_API cj_status cj_sha256_file(const char* path, char hex[65]);

#ifdef __cplusplus
}
#endif

#endif  /* CHALLENGE_JUDGE_H_ */
