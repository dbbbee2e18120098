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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "dataset.hpp"
#include "inference.hpp"

namespace cjudge {

struct AnalysisConfig {
  std::uint32_t replicates = 10000;
  std::uint64_t seed = 42;
  double level = 0.95;
  std::string positive;
  std::vector<MetricKind> metrics{kAllMetrics.begin(), kAllMetrics.end()};
};

/// Equal-width histogram. edges.size() == counts.size() + 1; a sample with
/// zero range gets a single bin whose two edges coincide.
struct Histogram {
  std::vector<double> edges;
  std::vector<std::size_t> counts;
};

/// Freedman-Diaconis bin count, max(10, ceil(range / (2 IQR n^(-1/3)))),
/// falling back to 10 bins when the IQR is zero and to one bin when the
/// range is zero. Capped at kMaxHistogramBins.
inline constexpr std::size_t kMaxHistogramBins = 1000;
std::size_t histogram_bin_count(std::span<const double> values);
Histogram make_histogram(std::span<const double> values);

/// Paired-difference distribution of one oriented pair (score_a >= score_b).
struct PairHistogram {
  MetricKind metric = MetricKind::F1;
  std::string team_a;
  std::string team_b;
  double delta = 0.0;
  double mean = 0.0;
  double median = 0.0;
  PValueResult p;
  Histogram histogram;
};

PairHistogram make_pair_histogram(const ScoreDistribution& a, const ScoreDistribution& b);

struct MetricSection {
  MetricKind metric = MetricKind::F1;
  std::vector<RankedInterval> ordered;
  std::string best;
  std::vector<DifferenceResult> differences;  // empty with a single team
  std::optional<StarMatrix> stars;            // absent with a single team
  std::vector<std::pair<std::string, std::size_t>> degenerate;  // dataset column order
};

struct ComparisonReport {
  AnalysisConfig config;
  std::size_t examples = 0;
  std::vector<TeamScores> points;  // dataset column order
  std::vector<MetricSection> sections;
  std::vector<PairHistogram> histograms;
};

nlohmann::ordered_json to_json(const ComparisonReport& r);
/// Canonical text: two-space indent, trailing newline.
std::string report_json_text(const ComparisonReport& r);

/// report.json plus table{1..4}_<metric>.{csv,tex} for every metric.
void emit_tables(const ComparisonReport& r, const std::filesystem::path& dir);
/// fig1_intervals.svg, one panel per section.
void emit_interval_plot(std::span<const MetricSection> sections, const std::filesystem::path& dir);
/// fig2_differences.svg; needs at least two teams.
void emit_difference_plot(std::span<const MetricSection> sections, const std::filesystem::path& dir);
/// fig3_<a>_vs_<b>.svg; returns the file name written.
std::string emit_histogram(const PairHistogram& h, const std::filesystem::path& dir);

std::string interval_plot_svg(std::span<const MetricSection> sections);
std::string difference_plot_svg(std::span<const MetricSection> sections);
std::string histogram_svg(const PairHistogram& h);
std::string histogram_file_name(const PairHistogram& h);

/// Every artifact above. Creates dir if needed.
void emit_all(const ComparisonReport& r, const std::filesystem::path& dir);

}  // namespace cjudge
