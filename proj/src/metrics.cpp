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

#include "metrics.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"

namespace cjudge {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::DuplicateColumn: return "DuplicateColumn";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::EmptyCell: return "EmptyCell";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnknownPositiveLabel: return "UnknownPositiveLabel";
    case ErrorCode::UnknownTeam: return "UnknownTeam";
    case ErrorCode::CountOutOfRange: return "CountOutOfRange";
    case ErrorCode::PlanMismatch: return "PlanMismatch";
    case ErrorCode::TooFewTeams: return "TooFewTeams";
    case ErrorCode::NegativeDelta: return "NegativeDelta";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

std::string_view metric_name(MetricKind m) noexcept {
  switch (m) {
    case MetricKind::Precision: return "precision";
    case MetricKind::Recall: return "recall";
    case MetricKind::F1: return "f1";
  }
  return "";
}

std::string_view metric_title(MetricKind m) noexcept {
  switch (m) {
    case MetricKind::Precision: return "Precision";
    case MetricKind::Recall: return "Recall";
    case MetricKind::F1: return "F1";
  }
  return "";
}

std::optional<MetricKind> parse_metric(std::string_view token) noexcept {
  for (MetricKind m : kAllMetrics) {
    if (token == metric_name(m)) return m;
  }
  return std::nullopt;
}

ConfusionCounts confusion(std::span<const std::string> gold,
                          std::span<const std::string> pred,
                          std::string_view positive) {
  if (gold.size() != pred.size() || gold.empty()) {
    throw Error(ErrorCode::LengthMismatch,
                "gold has " + std::to_string(gold.size()) +
                    " labels but prediction has " + std::to_string(pred.size()));
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const unsigned g = gold[i] == positive ? 2u : 0u;
    const unsigned p = pred[i] == positive ? 1u : 0u;
    tally(c, static_cast<std::uint8_t>(g | p));
  }
  return c;
}

Score score(const ConfusionCounts& c, MetricKind m) noexcept {
  const auto tp = static_cast<double>(c.tp);
  switch (m) {
    case MetricKind::Precision:
      if (c.predicted_positives() == 0) return {};
      return {tp / static_cast<double>(c.predicted_positives()), true};
    case MetricKind::Recall:
      if (c.gold_positives() == 0) return {};
      return {tp / static_cast<double>(c.gold_positives()), true};
    case MetricKind::F1:
      // P and R both defined with P + R > 0 holds exactly when tp > 0; then
      // 2PR/(P+R) reduces to 2tp/(2tp+fp+fn).
      if (c.tp == 0) return {};
      return {2.0 * tp / static_cast<double>(2 * c.tp + c.fp + c.fn), true};
  }
  return {};
}

double round4(double x) noexcept {
  // Snap to 9 decimals first so binary noise such as 0.71535 -> 7153.4999...
  // does not flip a tie downwards.
  const double scaled = std::round(x * 1e13) / 1e9;
  return std::floor(scaled + 0.5) / 1e4;
}

std::string format4(double x) {
  double r = round4(x);
  if (r == 0.0) r = 0.0;  // no "-0.0000"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", r);
  return buf;
}

}  // namespace cjudge
