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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "metrics.hpp"
#include "parallel.hpp"

namespace cjudge {

/// A b x n table of with-replacement example indices shared by every team.
/// Rows are regenerated on demand: row r is the Philox stream (seed, r), so
/// any subset of rows can be produced on any thread with identical values.
class ResamplePlan {
 public:
  ResamplePlan(std::uint32_t n, std::uint32_t b, std::uint64_t seed);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t replicates() const noexcept { return b_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Writes row r into out (out.size() == n).
  void fill_row(std::uint32_t r, std::span<std::uint32_t> out) const;
  std::vector<std::uint32_t> row(std::uint32_t r) const;
  /// All rows, row-major.
  std::vector<std::uint32_t> materialize() const;

  friend bool operator==(const ResamplePlan&, const ResamplePlan&) = default;

 private:
  std::uint32_t n_;
  std::uint32_t b_;
  std::uint64_t seed_;
};

ResamplePlan make_plan(std::uint32_t n, std::uint32_t b, std::uint64_t seed);

/// Calls fn(r, row) for every replicate r, partitioning replicates across
/// threads. fn must only write to per-replicate slots.
template <typename Fn>
void for_each_replicate(const ResamplePlan& plan, unsigned threads, Fn&& fn) {
  parallel_for_ranges(plan.replicates(), threads, [&](std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> row(plan.n());
    for (std::size_t r = begin; r < end; ++r) {
      plan.fill_row(static_cast<std::uint32_t>(r), row);
      fn(static_cast<std::uint32_t>(r), std::span<const std::uint32_t>(row));
    }
  });
}

/// Bootstrap scores of one (team, metric), aligned by replicate index.
struct ScoreDistribution {
  std::string team;
  MetricKind metric = MetricKind::F1;
  Score point;                       // full-dataset estimate
  std::vector<double> values;        // one per replicate
  std::size_t degenerate_count = 0;  // replicates with an undefined metric
};

/// Confusion counts of every team on every replicate: counts[team][r].
using ReplicateCounts = std::vector<std::vector<ConfusionCounts>>;

ReplicateCounts replicate_counts(const LabeledDataset& ds, const ResamplePlan& plan,
                                 unsigned threads = 1);

ScoreDistribution distribution_from_counts(const LabeledDataset& ds, std::size_t team,
                                           MetricKind m,
                                           std::span<const ConfusionCounts> counts);

/// Throws Error(UnknownTeam), or Error(PlanMismatch) when plan.n() != ds.size().
ScoreDistribution distribution(const LabeledDataset& ds, std::string_view team, MetricKind m,
                               const ResamplePlan& plan, unsigned threads = 1);

/// Element-wise a - b. Throws Error(PlanMismatch) when lengths differ and
/// Error(InvalidArgument) when the metrics differ.
std::vector<double> paired_difference(const ScoreDistribution& a, const ScoreDistribution& b);

}  // namespace cjudge
