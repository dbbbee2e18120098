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
#include "dataset.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "error.hpp"
#include "philox.hpp"

namespace cjudge {
namespace {

bool bad_token(std::string_view s) {
  return s.find_first_of(",\"\r\n") != std::string_view::npos;
}

void check_token(std::string_view s, std::string_view what) {
  if (s.empty()) throw Error(ErrorCode::EmptyCell, "empty " + std::string(what));
  if (bad_token(s)) {
    throw Error(ErrorCode::MalformedInput,
                std::string(what) + " '" + std::string(s) +
                    "' contains a comma, quote or line break");
  }
}

constexpr std::uint64_t kReconstructionStreamTag = std::uint64_t{1} << 63;

}  // namespace

LabeledDataset::LabeledDataset(std::vector<std::string> ids, std::vector<std::string> gold,
                               std::vector<TeamColumn> teams, std::string positive)
    : ids_(std::move(ids)),
      gold_(std::move(gold)),
      teams_(std::move(teams)),
      positive_(std::move(positive)) {
  const std::size_t n = gold_.size();
  if (n == 0) throw Error(ErrorCode::LengthMismatch, "dataset has no examples");
  if (ids_.size() != n) {
    throw Error(ErrorCode::LengthMismatch, "id column length differs from gold column");
  }
  if (teams_.empty()) throw Error(ErrorCode::MissingColumn, "dataset has no team columns");
  if (positive_.empty()) throw Error(ErrorCode::UnknownPositiveLabel, "positive label is empty");

  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids_) {
    check_token(id, "id");
    if (!seen.insert(id).second) throw Error(ErrorCode::DuplicateId, "duplicate id '" + id + "'");
  }
  for (const auto& g : gold_) check_token(g, "gold label");
  if (std::find(gold_.begin(), gold_.end(), positive_) == gold_.end()) {
    throw Error(ErrorCode::UnknownPositiveLabel,
                "positive label '" + positive_ + "' does not occur in the gold column");
  }

  seen.clear();
  for (const auto& t : teams_) {
    if (t.name.empty()) throw Error(ErrorCode::MissingColumn, "team column without a name");
    check_token(t.name, "team name");
    if (t.name == "id" || t.name == "gold" || !seen.insert(t.name).second) {
      throw Error(ErrorCode::DuplicateColumn, "duplicate column '" + t.name + "'");
    }
    if (t.labels.size() != n) {
      throw Error(ErrorCode::LengthMismatch, "team '" + t.name + "' has " +
                                                 std::to_string(t.labels.size()) +
                                                 " predictions, expected " + std::to_string(n));
    }
    for (const auto& p : t.labels) check_token(p, "prediction of team '" + t.name + "'");
  }

  outcomes_.reserve(teams_.size());
  counts_.reserve(teams_.size());
  for (const auto& t : teams_) {
    std::vector<std::uint8_t> codes(n);
    ConfusionCounts c;
    for (std::size_t i = 0; i < n; ++i) {
      const unsigned g = gold_[i] == positive_ ? 2u : 0u;
      const unsigned p = t.labels[i] == positive_ ? 1u : 0u;
      codes[i] = static_cast<std::uint8_t>(g | p);
      tally(c, codes[i]);
    }
    outcomes_.push_back(std::move(codes));
    counts_.push_back(c);
  }
}

std::optional<std::size_t> LabeledDataset::find_team(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < teams_.size(); ++i) {
    if (teams_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t LabeledDataset::team_index(std::string_view name) const {
  if (auto i = find_team(name)) return *i;
  throw Error(ErrorCode::UnknownTeam, "unknown team '" + std::string(name) + "'");
}

bool operator==(const LabeledDataset& a, const LabeledDataset& b) {
  if (a.ids_ != b.ids_ || a.gold_ != b.gold_ || a.positive_ != b.positive_) return false;
  if (a.teams_.size() != b.teams_.size()) return false;
  for (std::size_t i = 0; i < a.teams_.size(); ++i) {
    if (a.teams_[i].name != b.teams_[i].name || a.teams_[i].labels != b.teams_[i].labels) {
      return false;
    }
  }
  return true;
}

std::vector<TeamScores> point_estimates(const LabeledDataset& ds) {
  std::vector<TeamScores> out;
  out.reserve(ds.team_count());
  for (std::size_t t = 0; t < ds.team_count(); ++t) {
    TeamScores row{ds.teams()[t].name, ds.counts(t), {}};
    for (MetricKind m : kAllMetrics) row.scores[static_cast<std::size_t>(m)] = score(row.counts, m);
    out.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    cells.emplace_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

}  // namespace

LabeledDataset parse_csv(std::istream& in, std::string positive) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) throw Error(ErrorCode::MissingColumn, "input is empty, expected a header");
  if (line.find('"') != std::string::npos) {
    throw Error(ErrorCode::MalformedInput, "quoted fields are not supported");
  }
  const auto header = split_row(line);
  if (header.size() < 1 || header[0] != "id") {
    throw Error(ErrorCode::MissingColumn, "first header column must be 'id'");
  }
  if (header.size() < 2 || header[1] != "gold") {
    throw Error(ErrorCode::MissingColumn, "second header column must be 'gold'");
  }
  if (header.size() < 3) throw Error(ErrorCode::MissingColumn, "no team columns in header");

  std::vector<std::string> ids;
  std::vector<std::string> gold;
  std::vector<TeamColumn> teams;
  for (std::size_t c = 2; c < header.size(); ++c) teams.push_back({header[c], {}});

  while (next_line()) {
    if (line.empty()) continue;
    if (line.find('"') != std::string::npos) {
      throw Error(ErrorCode::MalformedInput,
                  "line " + std::to_string(line_no) + ": quoted fields are not supported");
    }
    auto cells = split_row(line);
    if (cells.size() != header.size()) {
      throw Error(ErrorCode::LengthMismatch, "line " + std::to_string(line_no) + " has " +
                                                 std::to_string(cells.size()) +
                                                 " cells, header has " +
                                                 std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].empty()) {
        throw Error(ErrorCode::EmptyCell, "line " + std::to_string(line_no) + ", column '" +
                                              header[c] + "' is empty");
      }
    }
    ids.push_back(std::move(cells[0]));
    gold.push_back(std::move(cells[1]));
    for (std::size_t c = 2; c < cells.size(); ++c) teams[c - 2].labels.push_back(std::move(cells[c]));
  }
  return LabeledDataset(std::move(ids), std::move(gold), std::move(teams), std::move(positive));
}

LabeledDataset load_csv(const std::filesystem::path& path, std::string positive) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  return parse_csv(in, std::move(positive));
}

void write_csv(const LabeledDataset& ds, std::ostream& out) {
  out << "id,gold";
  for (const auto& t : ds.teams()) out << ',' << t.name;
  out << '\n';
  for (std::size_t i = 0; i < ds.size(); ++i) {
    out << ds.ids()[i] << ',' << ds.gold()[i];
    for (const auto& t : ds.teams()) out << ',' << t.labels[i];
    out << '\n';
  }
}

void save_csv(const LabeledDataset& ds, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write '" + path.string() + "'");
  write_csv(ds, out);
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to '" + path.string() + "' failed");
}

// ---------------------------------------------------------------------------
// Reconstruction

ReconstructionSpec parse_reconstruction_spec(std::string_view json_text) {
  using nlohmann::ordered_json;
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("reconstruction spec: ") + e.what());
  }
  auto count_field = [](const ordered_json& obj, const char* key,
                        const std::string& where) -> std::uint64_t {
    if (!obj.contains(key)) {
      throw Error(ErrorCode::MalformedInput, where + ": missing '" + key + "'");
    }
    const auto& v = obj.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
      throw Error(ErrorCode::CountOutOfRange, where + ": '" + key + "' is negative");
    }
    throw Error(ErrorCode::MalformedInput, where + ": '" + key + "' must be an integer");
  };

  if (!doc.is_object()) throw Error(ErrorCode::MalformedInput, "reconstruction spec must be an object");
  ReconstructionSpec spec;
  spec.n_pos = count_field(doc, "n_pos", "spec");
  spec.n_neg = count_field(doc, "n_neg", "spec");
  if (doc.contains("positive_label")) spec.positive_label = doc.at("positive_label").get<std::string>();
  if (doc.contains("negative_label")) spec.negative_label = doc.at("negative_label").get<std::string>();
  if (!doc.contains("teams") || !doc.at("teams").is_object()) {
    throw Error(ErrorCode::MalformedInput, "spec: 'teams' must be an object");
  }
  for (const auto& [name, counts] : doc.at("teams").items()) {
    if (!counts.is_object()) {
      throw Error(ErrorCode::MalformedInput, "team '" + name + "' must be an object");
    }
    spec.teams.push_back({name, count_field(counts, "tp", "team '" + name + "'"),
                          count_field(counts, "fp", "team '" + name + "'")});
  }
  return spec;
}

ReconstructionSpec load_reconstruction_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_reconstruction_spec(buf.str());
}

LabeledDataset reconstruct(const ReconstructionSpec& spec, std::uint64_t seed) {
  constexpr std::uint64_t kMaxSide = 0xFFFFFFFFu;
  if (spec.n_pos == 0) throw Error(ErrorCode::CountOutOfRange, "n_pos must be at least 1");
  if (spec.n_pos > kMaxSide || spec.n_neg > kMaxSide || spec.n_pos + spec.n_neg > kMaxSide) {
    throw Error(ErrorCode::CountOutOfRange, "dataset too large");
  }
  if (spec.positive_label == spec.negative_label) {
    throw Error(ErrorCode::InvalidArgument, "positive and negative labels must differ");
  }
  for (const auto& t : spec.teams) {
    if (t.tp > spec.n_pos) {
      throw Error(ErrorCode::CountOutOfRange, "team '" + t.name + "': tp " +
                                                  std::to_string(t.tp) + " exceeds n_pos " +
                                                  std::to_string(spec.n_pos));
    }
    if (t.fp > spec.n_neg) {
      throw Error(ErrorCode::CountOutOfRange, "team '" + t.name + "': fp " +
                                                  std::to_string(t.fp) + " exceeds n_neg " +
                                                  std::to_string(spec.n_neg));
    }
  }

  const std::size_t n_pos = spec.n_pos;
  const std::size_t n = spec.n_pos + spec.n_neg;
  std::vector<std::string> ids(n);
  std::vector<std::string> gold(n);
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = std::to_string(i + 1);
    gold[i] = i < n_pos ? spec.positive_label : spec.negative_label;
  }

  // Marks the first k entries of a partial Fisher-Yates shuffle of
  // [offset, offset + size) as predicted positive.
  auto mark = [](std::vector<std::string>& labels, PhiloxStream& rng, std::size_t offset,
                 std::size_t size, std::size_t k, const std::string& positive) {
    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + rng.below(static_cast<std::uint32_t>(size - i));
      std::swap(perm[i], perm[j]);
      labels[offset + perm[i]] = positive;
    }
  };

  std::vector<TeamColumn> teams;
  teams.reserve(spec.teams.size());
  for (std::size_t t = 0; t < spec.teams.size(); ++t) {
    const auto& tc = spec.teams[t];
    PhiloxStream rng(seed, kReconstructionStreamTag | t);
    std::vector<std::string> labels(n, spec.negative_label);
    mark(labels, rng, 0, n_pos, tc.tp, spec.positive_label);
    mark(labels, rng, n_pos, n - n_pos, tc.fp, spec.positive_label);
    teams.push_back({tc.name, std::move(labels)});
  }
  return LabeledDataset(std::move(ids), std::move(gold), std::move(teams), spec.positive_label);
}

}  // namespace cjudge
