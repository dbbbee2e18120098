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
#include "resampling.hpp"

#include "error.hpp"
#include "philox.hpp"

namespace cjudge {

ResamplePlan::ResamplePlan(std::uint32_t n, std::uint32_t b, std::uint64_t seed)
    : n_(n), b_(b), seed_(seed) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "resample size must be at least 1");
  if (b == 0) throw Error(ErrorCode::InvalidArgument, "replicate count must be at least 1");
}

void ResamplePlan::fill_row(std::uint32_t r, std::span<std::uint32_t> out) const {
  PhiloxStream rng(seed_, r);
  for (auto& idx : out) idx = rng.below(n_);
}

std::vector<std::uint32_t> ResamplePlan::row(std::uint32_t r) const {
  std::vector<std::uint32_t> out(n_);
  fill_row(r, out);
  return out;
}

std::vector<std::uint32_t> ResamplePlan::materialize() const {
  std::vector<std::uint32_t> out(std::size_t{n_} * b_);
  for (std::uint32_t r = 0; r < b_; ++r) {
    fill_row(r, std::span<std::uint32_t>(out).subspan(std::size_t{r} * n_, n_));
  }
  return out;
}

ResamplePlan make_plan(std::uint32_t n, std::uint32_t b, std::uint64_t seed) {
  return ResamplePlan(n, b, seed);
}

ReplicateCounts replicate_counts(const LabeledDataset& ds, const ResamplePlan& plan,
                                 unsigned threads) {
  if (plan.n() != ds.size()) {
    throw Error(ErrorCode::PlanMismatch, "plan size " + std::to_string(plan.n()) +
                                             " differs from dataset size " +
                                             std::to_string(ds.size()));
  }
  const std::size_t k = ds.team_count();
  ReplicateCounts counts(k, std::vector<ConfusionCounts>(plan.replicates()));
  for_each_replicate(plan, threads, [&](std::uint32_t r, std::span<const std::uint32_t> row) {
    for (std::size_t t = 0; t < k; ++t) {
      const auto outcomes = ds.outcomes(t);
      std::uint64_t tally4[4] = {0, 0, 0, 0};
      for (std::uint32_t idx : row) ++tally4[outcomes[idx]];
      counts[t][r] = {tally4[kTruePos], tally4[kFalsePos], tally4[kFalseNeg], tally4[kTrueNeg]};
    }
  });
  return counts;
}

ScoreDistribution distribution_from_counts(const LabeledDataset& ds, std::size_t team,
                                           MetricKind m,
                                           std::span<const ConfusionCounts> counts) {
  ScoreDistribution d;
  d.team = ds.teams()[team].name;
  d.metric = m;
  d.point = score(ds.counts(team), m);
  d.values.reserve(counts.size());
  for (const auto& c : counts) {
    const Score s = score(c, m);
    if (!s.defined) ++d.degenerate_count;
    d.values.push_back(s.value);
  }
  return d;
}

ScoreDistribution distribution(const LabeledDataset& ds, std::string_view team, MetricKind m,
                               const ResamplePlan& plan, unsigned threads) {
  const std::size_t t = ds.team_index(team);
  if (plan.n() != ds.size()) {
    throw Error(ErrorCode::PlanMismatch, "plan size differs from dataset size");
  }
  std::vector<ConfusionCounts> counts(plan.replicates());
  const auto outcomes = ds.outcomes(t);
  for_each_replicate(plan, threads, [&](std::uint32_t r, std::span<const std::uint32_t> row) {
    ConfusionCounts c;
    for (std::uint32_t idx : row) tally(c, outcomes[idx]);
    counts[r] = c;
  });
  return distribution_from_counts(ds, t, m, counts);
}

std::vector<double> paired_difference(const ScoreDistribution& a, const ScoreDistribution& b) {
  if (a.values.size() != b.values.size()) {
    throw Error(ErrorCode::PlanMismatch, "distributions of '" + a.team + "' and '" + b.team +
                                             "' have different replicate counts");
  }
  if (a.metric != b.metric) {
    throw Error(ErrorCode::InvalidArgument, "cannot pair distributions of different metrics");
  }
  std::vector<double> diff(a.values.size());
  for (std::size_t r = 0; r < diff.size(); ++r) diff[r] = a.values[r] - b.values[r];
  return diff;
}

}  // namespace cjudge
