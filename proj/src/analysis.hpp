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

#include <string>
#include <utility>
#include <vector>

#include "report.hpp"

namespace cjudge {

struct AnalysisOptions {
  AnalysisConfig config;
  unsigned threads = 1;  // 0: hardware parallelism; never affects results
  /// Histogram pairs by team name. Empty: the best team against the next two
  /// by point estimate on the histogram metric.
  std::vector<std::pair<std::string, std::string>> pairs;
};

/// Metric used for histogram pairs: F1 when selected, else the first metric.
MetricKind histogram_metric(const AnalysisConfig& config);

/// Runs the full paired-bootstrap comparison on one shared resample plan.
ComparisonReport analyze(const LabeledDataset& ds, const AnalysisOptions& options);

}  // namespace cjudge
