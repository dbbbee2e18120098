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
#include "analysis.hpp"

#include <algorithm>
#include <limits>

#include "error.hpp"

namespace cjudge {

MetricKind histogram_metric(const AnalysisConfig& config) {
  if (std::find(config.metrics.begin(), config.metrics.end(), MetricKind::F1) !=
      config.metrics.end()) {
    return MetricKind::F1;
  }
  return config.metrics.front();
}

ComparisonReport analyze(const LabeledDataset& ds, const AnalysisOptions& options) {
  const AnalysisConfig& cfg = options.config;
  if (cfg.metrics.empty()) throw Error(ErrorCode::InvalidArgument, "no metrics selected");
  if (cfg.replicates == 0) throw Error(ErrorCode::InvalidArgument, "replicate count must be >= 1");
  if (!(cfg.level > 0.0 && cfg.level < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "confidence level must lie in (0, 1)");
  }
  if (ds.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::InvalidArgument, "dataset too large");
  }

  ComparisonReport report;
  report.config = cfg;
  report.config.positive = ds.positive();
  report.examples = ds.size();
  report.points = point_estimates(ds);

  const ResamplePlan plan(static_cast<std::uint32_t>(ds.size()), cfg.replicates, cfg.seed);
  const ReplicateCounts counts = replicate_counts(ds, plan, options.threads);

  std::vector<std::vector<ScoreDistribution>> by_metric;
  for (MetricKind m : cfg.metrics) {
    std::vector<ScoreDistribution> dists;
    dists.reserve(ds.team_count());
    for (std::size_t t = 0; t < ds.team_count(); ++t) {
      dists.push_back(distribution_from_counts(ds, t, m, counts[t]));
    }

    MetricSection s;
    s.metric = m;
    s.ordered = ordered_intervals(dists, cfg.level);
    s.best = dists[best_index(dists)].team;
    if (dists.size() >= 2) {
      s.differences = differences_from_best(dists, cfg.level);
      s.stars = star_matrix(dists);
    }
    for (const auto& d : dists) s.degenerate.emplace_back(d.team, d.degenerate_count);
    report.sections.push_back(std::move(s));
    by_metric.push_back(std::move(dists));
  }

  if (ds.team_count() >= 2) {
    const MetricKind hm = histogram_metric(cfg);
    const auto pos = std::find(cfg.metrics.begin(), cfg.metrics.end(), hm) - cfg.metrics.begin();
    const auto& dists = by_metric[static_cast<std::size_t>(pos)];
    const auto& ordered = report.sections[static_cast<std::size_t>(pos)].ordered;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (options.pairs.empty()) {
      const std::size_t best = ds.team_index(ordered[0].team);
      for (std::size_t i = 1; i < std::min<std::size_t>(3, ordered.size()); ++i) {
        pairs.emplace_back(best, ds.team_index(ordered[i].team));
      }
    } else {
      for (const auto& [a, b] : options.pairs) {
        std::size_t ia = ds.team_index(a);
        std::size_t ib = ds.team_index(b);
        if (dists[ia].point.value < dists[ib].point.value) std::swap(ia, ib);
        pairs.emplace_back(ia, ib);
      }
    }
    for (const auto& [a, b] : pairs) {
      report.histograms.push_back(make_pair_histogram(dists[a], dists[b]));
    }
  }
  return report;
}

}  // namespace cjudge
