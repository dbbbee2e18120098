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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metrics.hpp"

namespace cjudge {

struct TeamColumn {
  std::string name;
  std::vector<std::string> labels;
};

/// Gold labels plus aligned per-team prediction columns. Immutable once
/// constructed; the constructor enforces every structural invariant.
class LabeledDataset {
 public:
  LabeledDataset(std::vector<std::string> ids, std::vector<std::string> gold,
                 std::vector<TeamColumn> teams, std::string positive);

  std::size_t size() const noexcept { return gold_.size(); }
  std::size_t team_count() const noexcept { return teams_.size(); }

  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::vector<std::string>& gold() const noexcept { return gold_; }
  const std::vector<TeamColumn>& teams() const noexcept { return teams_; }
  const std::string& positive() const noexcept { return positive_; }

  std::optional<std::size_t> find_team(std::string_view name) const noexcept;
  /// Throws Error(UnknownTeam).
  std::size_t team_index(std::string_view name) const;

  /// Per-example Outcome codes of one team against gold.
  std::span<const std::uint8_t> outcomes(std::size_t team) const noexcept {
    return outcomes_[team];
  }
  ConfusionCounts counts(std::size_t team) const noexcept { return counts_[team]; }

  friend bool operator==(const LabeledDataset& a, const LabeledDataset& b);

 private:
  std::vector<std::string> ids_;
  std::vector<std::string> gold_;
  std::vector<TeamColumn> teams_;
  std::string positive_;
  std::vector<std::vector<std::uint8_t>> outcomes_;
  std::vector<ConfusionCounts> counts_;
};

struct TeamScores {
  std::string team;
  ConfusionCounts counts;
  std::array<Score, 3> scores;  // indexed by MetricKind

  const Score& operator[](MetricKind m) const noexcept {
    return scores[static_cast<std::size_t>(m)];
  }
};

/// Full-dataset scores for every team and metric, in dataset column order.
std::vector<TeamScores> point_estimates(const LabeledDataset& ds);

// CSV layout: header "id,gold,<team...>", one row per example, comma
// delimiter, no quoting. UTF-8 BOM and CRLF line endings are accepted.
LabeledDataset parse_csv(std::istream& in, std::string positive);
LabeledDataset load_csv(const std::filesystem::path& path, std::string positive);
void write_csv(const LabeledDataset& ds, std::ostream& out);
void save_csv(const LabeledDataset& ds, const std::filesystem::path& path);

struct TeamCounts {
  std::string name;
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
};

/// Per-team (tp, fp) counts over a gold standard of n_pos positives followed
/// by n_neg negatives.
struct ReconstructionSpec {
  std::uint64_t n_pos = 0;
  std::uint64_t n_neg = 0;
  std::vector<TeamCounts> teams;
  std::string positive_label = "positive";
  std::string negative_label = "negative";
};

/// JSON: {"n_pos": int, "n_neg": int, "teams": {name: {"tp": int, "fp": int}}}
/// with optional "positive_label"/"negative_label". Team order follows the
/// document.
ReconstructionSpec parse_reconstruction_spec(std::string_view json_text);
ReconstructionSpec load_reconstruction_spec(const std::filesystem::path& path);

/// Builds a dataset whose per-team confusion counts equal the spec exactly.
/// Which examples each team gets right is drawn from a seeded stream, one
/// stream per team, so teams' errors are placed independently.
LabeledDataset reconstruct(const ReconstructionSpec& spec, std::uint64_t seed);

}  // namespace cjudge
