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
#include "challenge_judge/challenge_judge.h"

#include <cstdio>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include <openssl/evp.h>

#include "analysis.hpp"
#include "dataset.hpp"
#include "error.hpp"

struct cj_dataset {
  cjudge::LabeledDataset ds;
};

struct cj_report {
  cjudge::ComparisonReport report;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

cj_status to_status(cjudge::ErrorCode code) {
  using cjudge::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return CJ_ERR_INVALID_ARGUMENT;
    case ErrorCode::LengthMismatch: return CJ_ERR_LENGTH_MISMATCH;
    case ErrorCode::MissingColumn: return CJ_ERR_MISSING_COLUMN;
    case ErrorCode::DuplicateColumn: return CJ_ERR_DUPLICATE_COLUMN;
    case ErrorCode::DuplicateId: return CJ_ERR_DUPLICATE_ID;
    case ErrorCode::EmptyCell: return CJ_ERR_EMPTY_CELL;
    case ErrorCode::MalformedInput: return CJ_ERR_MALFORMED_INPUT;
    case ErrorCode::UnknownPositiveLabel: return CJ_ERR_UNKNOWN_POSITIVE_LABEL;
    case ErrorCode::UnknownTeam: return CJ_ERR_UNKNOWN_TEAM;
    case ErrorCode::CountOutOfRange: return CJ_ERR_COUNT_OUT_OF_RANGE;
    case ErrorCode::PlanMismatch: return CJ_ERR_PLAN_MISMATCH;
    case ErrorCode::TooFewTeams: return CJ_ERR_TOO_FEW_TEAMS;
    case ErrorCode::NegativeDelta: return CJ_ERR_NEGATIVE_DELTA;
    case ErrorCode::IoFailure: return CJ_ERR_IO;
  }
  return CJ_ERR_INTERNAL;
}

cj_status fail(cj_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
cj_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return CJ_OK;
  } catch (const cjudge::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CJ_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CJ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(CJ_ERR_INTERNAL, "unknown error");
  }
}

#define CJ_REQUIRE(cond, what) \
  do {                        \
    if (!(cond)) return fail(CJ_ERR_INVALID_ARGUMENT, what); \
  } while (0)

std::vector<std::pair<std::string, std::string>> parse_pairs(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string_view item = text.substr(start, comma - start);
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size() ||
        item.find(':', colon + 1) != std::string_view::npos) {
      throw cjudge::Error(cjudge::ErrorCode::InvalidArgument,
                          "pair '" + std::string(item) + "' must look like TEAM_A:TEAM_B");
    }
    out.emplace_back(std::string(item.substr(0, colon)), std::string(item.substr(colon + 1)));
    start = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

const char* cj_version(void) { return CJ_VERSION_STRING; }

const char* cj_status_name(cj_status status) {
  switch (status) {
    case CJ_OK: return "ok";
    case CJ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CJ_ERR_LENGTH_MISMATCH: return "length mismatch";
    case CJ_ERR_MISSING_COLUMN: return "missing column";
    case CJ_ERR_DUPLICATE_COLUMN: return "duplicate column";
    case CJ_ERR_DUPLICATE_ID: return "duplicate id";
    case CJ_ERR_EMPTY_CELL: return "empty cell";
    case CJ_ERR_MALFORMED_INPUT: return "malformed input";
    case CJ_ERR_UNKNOWN_POSITIVE_LABEL: return "unknown positive label";
    case CJ_ERR_UNKNOWN_TEAM: return "unknown team";
    case CJ_ERR_COUNT_OUT_OF_RANGE: return "count out of range";
    case CJ_ERR_PLAN_MISMATCH: return "plan mismatch";
    case CJ_ERR_TOO_FEW_TEAMS: return "too few teams";
    case CJ_ERR_NEGATIVE_DELTA: return "negative delta";
    case CJ_ERR_IO: return "i/o failure";
    case CJ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* cj_last_error_message(void) { return g_last_error.c_str(); }

cj_status cj_dataset_load_csv(const char* path, const char* positive, cj_dataset** out) {
  CJ_REQUIRE(path && positive && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new cj_dataset{cjudge::load_csv(path, positive)}; });
}

cj_status cj_dataset_reconstruct(const char* spec_path, uint64_t seed, cj_dataset** out) {
  CJ_REQUIRE(spec_path && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new cj_dataset{cjudge::reconstruct(cjudge::load_reconstruction_spec(spec_path), seed)};
  });
}

cj_status cj_dataset_reconstruct_json(const char* spec_json, uint64_t seed, cj_dataset** out) {
  CJ_REQUIRE(spec_json && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new cj_dataset{cjudge::reconstruct(cjudge::parse_reconstruction_spec(spec_json), seed)};
  });
}

cj_status cj_dataset_save_csv(const cj_dataset* ds, const char* path) {
  CJ_REQUIRE(ds && path, "null argument");
  return guarded([&] { cjudge::save_csv(ds->ds, path); });
}

void cj_dataset_free(cj_dataset* ds) { delete ds; }

size_t cj_dataset_size(const cj_dataset* ds) { return ds ? ds->ds.size() : 0; }

size_t cj_dataset_team_count(const cj_dataset* ds) { return ds ? ds->ds.team_count() : 0; }

const char* cj_dataset_team_name(const cj_dataset* ds, size_t index) {
  if (!ds || index >= ds->ds.team_count()) return nullptr;
  return ds->ds.teams()[index].name.c_str();
}

const char* cj_dataset_positive(const cj_dataset* ds) {
  return ds ? ds->ds.positive().c_str() : nullptr;
}

cj_status cj_dataset_confusion(const cj_dataset* ds, size_t team, uint64_t counts[4]) {
  CJ_REQUIRE(ds && counts, "null argument");
  if (team >= ds->ds.team_count()) return fail(CJ_ERR_UNKNOWN_TEAM, "team index out of range");
  const auto c = ds->ds.counts(team);
  counts[0] = c.tp;
  counts[1] = c.fp;
  counts[2] = c.fn;
  counts[3] = c.tn;
  return CJ_OK;
}

cj_status cj_dataset_score(const cj_dataset* ds, size_t team, cj_metric metric, double* value,
                           int* defined) {
  CJ_REQUIRE(ds && value && defined, "null argument");
  CJ_REQUIRE(metric >= CJ_METRIC_PRECISION && metric <= CJ_METRIC_F1, "unknown metric");
  if (team >= ds->ds.team_count()) return fail(CJ_ERR_UNKNOWN_TEAM, "team index out of range");
  const auto s = cjudge::score(ds->ds.counts(team), static_cast<cjudge::MetricKind>(metric));
  *value = s.value;
  *defined = s.defined ? 1 : 0;
  return CJ_OK;
}

void cj_analysis_options_init(cj_analysis_options* options) {
  if (!options) return;
  options->replicates = 10000;
  options->seed = 42;
  options->level = 0.95;
  options->metrics = CJ_METRICS_ALL;
  options->threads = 0;
  options->pairs = nullptr;
}

cj_status cj_analyze(const cj_dataset* ds, const cj_analysis_options* options, cj_report** out) {
  CJ_REQUIRE(ds && options && out, "null argument");
  *out = nullptr;
  CJ_REQUIRE((options->metrics & ~CJ_METRICS_ALL) == 0, "unknown metric bits");
  CJ_REQUIRE(options->metrics != 0, "no metrics selected");
  return guarded([&] {
    cjudge::AnalysisOptions opts;
    opts.config.replicates = options->replicates;
    opts.config.seed = options->seed;
    opts.config.level = options->level;
    opts.config.metrics.clear();
    for (cjudge::MetricKind m : cjudge::kAllMetrics) {
      if (options->metrics & CJ_MASK(static_cast<unsigned>(m))) opts.config.metrics.push_back(m);
    }
    opts.threads = options->threads;
    if (options->pairs && *options->pairs) opts.pairs = parse_pairs(options->pairs);
    auto report = std::make_unique<cj_report>();
    report->report = cjudge::analyze(ds->ds, opts);
    report->json = cjudge::report_json_text(report->report);
    *out = report.release();
  });
}

void cj_report_free(cj_report* report) { delete report; }

const char* cj_report_json(const cj_report* report) {
  return report ? report->json.c_str() : nullptr;
}

cj_status cj_report_emit(const cj_report* report, const char* dir) {
  CJ_REQUIRE(report && dir, "null argument");
  return guarded([&] { cjudge::emit_all(report->report, dir); });
}

cj_status cj_sha256_file(const char* path, char hex[65]) {
  CJ_REQUIRE(path && hex, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CJ_ERR_IO, std::string("cannot open '") + path + "'");
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    return fail(CJ_ERR_INTERNAL, "sha256 unavailable");
  }
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof buf);
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf, static_cast<size_t>(in.gcount()));
  }
  if (in.bad()) return fail(CJ_ERR_IO, std::string("read of '") + path + "' failed");
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &len);
  for (unsigned i = 0; i < len && i < 32; ++i) std::snprintf(hex + 2 * i, 3, "%02x", digest[i]);
  hex[64] = '\0';
  return CJ_OK;
}

}  // extern "C"
