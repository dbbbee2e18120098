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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resampling.hpp"

namespace cjudge {

struct ConfidenceInterval {
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  double point = 0.0;
};

/// Empirical quantile of ascending-sorted values with linear interpolation
/// between order statistics: position h = (N - 1) q.
double sorted_quantile(std::span<const double> sorted, double q);

/// Percentile interval of arbitrary replicate values; point is left at 0.
ConfidenceInterval percentile_interval(std::span<const double> values, double level);

ConfidenceInterval percentile_ci(const ScoreDistribution& d, double level);

struct RankedInterval {
  std::string team;
  ConfidenceInterval ci;
};

/// Sorted by point estimate descending, ties by team name ascending.
std::vector<RankedInterval> ordered_intervals(std::span<const ScoreDistribution> all,
                                              double level);

/// Closed-interval overlap: max(lowers) <= min(uppers).
bool overlap(const ConfidenceInterval& a, const ConfidenceInterval& b) noexcept;

struct DifferenceResult {
  std::string team_a;
  std::string team_b;
  double delta = 0.0;  // full-dataset score_a - score_b
  ConfidenceInterval ci;
  double mean = 0.0;  // bootstrap mean of the paired differences
  bool contains_zero = true;
};

DifferenceResult paired_difference_result(const ScoreDistribution& a,
                                          const ScoreDistribution& b, double level);

/// Index of the best team by point estimate (ties: lexicographically first).
std::size_t best_index(std::span<const ScoreDistribution> all);

/// Best-minus-other for every other team, ascending by bootstrap mean.
/// Throws Error(TooFewTeams) with fewer than two teams.
std::vector<DifferenceResult> differences_from_best(std::span<const ScoreDistribution> all,
                                                    double level);

struct PValueResult {
  double p = 1.0;
  std::size_t b_exceed = 0;
  std::size_t replicates = 0;
};

/// Shifted-null bootstrap p-value: counts replicates whose difference is
/// strictly greater than 2*delta, with add-one smoothing
/// p = (b_exceed + 1) / (b + 1). A zero delta is no lead at all and counts
/// every replicate, giving p = 1. Throws Error(NegativeDelta) if delta < 0.
PValueResult p_value(std::span<const double> diffs, double delta);

/// min(1, 2p).
double two_sided(double p) noexcept;

/// "", "†", "*", "**", "***" for p < .1, .05, .01, .001 respectively.
std::string_view stars_for(double p) noexcept;

struct StarCell {
  std::size_t row = 0;     // index into StarMatrix::teams
  std::size_t column = 0;  // column < row
  double delta = 0.0;      // score[column] - score[row] >= 0
  PValueResult p;
  std::string stars;
};

struct StarMatrix {
  std::vector<std::string> teams;  // point estimate descending
  std::vector<StarCell> cells;     // row-major lower triangle

  const StarCell* cell(std::size_t row, std::size_t column) const noexcept;
};

/// Throws Error(TooFewTeams) with fewer than two teams.
StarMatrix star_matrix(std::span<const ScoreDistribution> all);

}  // namespace cjudge
