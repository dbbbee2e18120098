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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace cjudge {

enum class MetricKind { Precision, Recall, F1 };

inline constexpr std::array<MetricKind, 3> kAllMetrics = {
    MetricKind::Precision, MetricKind::Recall, MetricKind::F1};

/// Lower-case token used in file names and on the command line.
std::string_view metric_name(MetricKind m) noexcept;
std::string_view metric_title(MetricKind m) noexcept;
std::optional<MetricKind> parse_metric(std::string_view token) noexcept;

/// Positive-class confusion counts of one prediction column against gold.
struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t n() const noexcept { return tp + fp + fn + tn; }
  std::uint64_t gold_positives() const noexcept { return tp + fn; }
  std::uint64_t predicted_positives() const noexcept { return tp + fp; }

  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

/// A metric value. A zero denominator yields value 0 with defined == false.
struct Score {
  double value = 0.0;
  bool defined = false;
};

/// Outcome of one example, packed as (gold_positive << 1) | pred_positive.
enum Outcome : std::uint8_t { kTrueNeg = 0, kFalsePos = 1, kFalseNeg = 2, kTruePos = 3 };

inline void tally(ConfusionCounts& c, std::uint8_t outcome) noexcept {
  switch (outcome) {
    case kTruePos: ++c.tp; break;
    case kFalsePos: ++c.fp; break;
    case kFalseNeg: ++c.fn; break;
    default: ++c.tn; break;
  }
}

/// Throws Error(LengthMismatch) when the vectors differ in length or are empty.
ConfusionCounts confusion(std::span<const std::string> gold,
                          std::span<const std::string> pred,
                          std::string_view positive);

Score score(const ConfusionCounts& c, MetricKind m) noexcept;

/// Round half-up to four decimals; presentation only.
double round4(double x) noexcept;
std::string format4(double x);

}  // namespace cjudge
