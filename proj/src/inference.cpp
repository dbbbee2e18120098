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
#include "inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "error.hpp"

namespace cjudge {
namespace {

void check_level(double level) {
  if (!(level > 0.0 && level < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "confidence level must lie in (0, 1)");
  }
}

void check_shared(std::span<const ScoreDistribution> all) {
  for (const auto& d : all) {
    if (d.metric != all.front().metric) {
      throw Error(ErrorCode::InvalidArgument, "distributions mix metrics");
    }
    if (d.values.size() != all.front().values.size()) {
      throw Error(ErrorCode::PlanMismatch, "distributions come from different plans");
    }
  }
}

// Point estimate descending, then team name ascending.
std::vector<std::size_t> rank_order(std::span<const ScoreDistribution> all) {
  std::vector<std::size_t> order(all.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (all[a].point.value != all[b].point.value) return all[a].point.value > all[b].point.value;
    return all[a].team < all[b].team;
  });
  return order;
}

double mean_of(std::span<const double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / static_cast<double>(v.size());
}

}  // namespace

double sorted_quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw Error(ErrorCode::InvalidArgument, "quantile of an empty sample");
  const double h = static_cast<double>(sorted.size() - 1) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

ConfidenceInterval percentile_interval(std::span<const double> values, double level) {
  check_level(level);
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "empty distribution");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double alpha = 1.0 - level;
  ConfidenceInterval ci;
  ci.level = level;
  ci.lower = sorted_quantile(sorted, alpha / 2.0);
  ci.upper = sorted_quantile(sorted, 1.0 - alpha / 2.0);
  return ci;
}

ConfidenceInterval percentile_ci(const ScoreDistribution& d, double level) {
  ConfidenceInterval ci = percentile_interval(d.values, level);
  ci.point = d.point.value;
  return ci;
}

std::vector<RankedInterval> ordered_intervals(std::span<const ScoreDistribution> all,
                                              double level) {
  check_shared(all);
  std::vector<RankedInterval> out;
  out.reserve(all.size());
  for (std::size_t i : rank_order(all)) out.push_back({all[i].team, percentile_ci(all[i], level)});
  return out;
}

bool overlap(const ConfidenceInterval& a, const ConfidenceInterval& b) noexcept {
  return std::max(a.lower, b.lower) <= std::min(a.upper, b.upper);
}

DifferenceResult paired_difference_result(const ScoreDistribution& a,
                                          const ScoreDistribution& b, double level) {
  const auto diffs = paired_difference(a, b);
  DifferenceResult r;
  r.team_a = a.team;
  r.team_b = b.team;
  r.delta = a.point.value - b.point.value;
  r.ci = percentile_interval(diffs, level);
  r.ci.point = r.delta;
  r.mean = mean_of(diffs);
  r.contains_zero = r.ci.lower <= 0.0 && 0.0 <= r.ci.upper;
  return r;
}

std::size_t best_index(std::span<const ScoreDistribution> all) {
  if (all.empty()) throw Error(ErrorCode::TooFewTeams, "no teams");
  return rank_order(all).front();
}

std::vector<DifferenceResult> differences_from_best(std::span<const ScoreDistribution> all,
                                                    double level) {
  if (all.size() < 2) {
    throw Error(ErrorCode::TooFewTeams, "differences need at least two teams");
  }
  check_shared(all);
  const std::size_t best = best_index(all);
  std::vector<DifferenceResult> out;
  out.reserve(all.size() - 1);
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i != best) out.push_back(paired_difference_result(all[best], all[i], level));
  }
  std::stable_sort(out.begin(), out.end(), [](const DifferenceResult& x, const DifferenceResult& y) {
    if (x.mean != y.mean) return x.mean < y.mean;
    return x.team_b < y.team_b;
  });
  return out;
}

PValueResult p_value(std::span<const double> diffs, double delta) {
  if (delta < 0.0) {
    throw Error(ErrorCode::NegativeDelta,
                "observed difference is negative; orient the pair so the first team leads");
  }
  if (diffs.empty()) throw Error(ErrorCode::InvalidArgument, "no replicates");
  const double threshold = 2.0 * delta;
  PValueResult r;
  r.replicates = diffs.size();
  if (delta == 0.0) {
    // No observed lead: every replicate is at least as extreme, p = 1.
    r.b_exceed = diffs.size();
  } else {
    r.b_exceed = static_cast<std::size_t>(
        std::count_if(diffs.begin(), diffs.end(), [&](double d) { return d > threshold; }));
  }
  r.p = static_cast<double>(r.b_exceed + 1) / static_cast<double>(r.replicates + 1);
  return r;
}

double two_sided(double p) noexcept { return std::min(1.0, 2.0 * p); }

std::string_view stars_for(double p) noexcept {
  if (p < 0.001) return "***";
  if (p < 0.01) return "**";
  if (p < 0.05) return "*";
  if (p < 0.1) return "†";
  return "";
}

const StarCell* StarMatrix::cell(std::size_t row, std::size_t column) const noexcept {
  if (column >= row || row >= teams.size()) return nullptr;
  return &cells[row * (row - 1) / 2 + column];
}

StarMatrix star_matrix(std::span<const ScoreDistribution> all) {
  if (all.size() < 2) throw Error(ErrorCode::TooFewTeams, "star matrix needs at least two teams");
  check_shared(all);
  const auto order = rank_order(all);
  StarMatrix m;
  for (std::size_t i : order) m.teams.push_back(all[i].team);
  for (std::size_t row = 1; row < order.size(); ++row) {
    const auto& lower = all[order[row]];
    for (std::size_t col = 0; col < row; ++col) {
      const auto& higher = all[order[col]];
      StarCell c;
      c.row = row;
      c.column = col;
      c.delta = higher.point.value - lower.point.value;
      c.p = p_value(paired_difference(higher, lower), c.delta);
      c.stars = std::string(stars_for(c.p.p));
      m.cells.push_back(std::move(c));
    }
  }
  return m;
}

}  // namespace cjudge
