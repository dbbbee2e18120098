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
// challenge-judge: paired bootstrap comparison of challenge submissions.
//
//   challenge-judge analyze --input preds.csv --positive offensive --out results/
//   challenge-judge reconstruct --spec table1.json --seed 7 --out preds.csv
//   challenge-judge validate --input preds.csv --positive offensive
//
// Exit status: 0 success, 2 invalid configuration or input, 1 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "challenge_judge/challenge_judge.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

constexpr std::uint32_t kMinReplicates = 100;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string input;
  std::string positive;
  std::uint32_t replicates = 10000;
  std::uint64_t seed = 42;
  double level = 0.95;
  std::vector<std::string> metrics{"precision", "recall", "f1"};
  std::string out;
  std::optional<unsigned> threads;
  std::vector<std::string> pairs;
};

struct Handles {
  cj_dataset* ds = nullptr;
  cj_report* report = nullptr;
  ~Handles() {
    cj_report_free(report);
    cj_dataset_free(ds);
  }
};

int report_failure(cj_status status, std::string_view during) {
  std::cerr << "challenge-judge: " << during << ": " << cj_status_name(status) << ": "
            << cj_last_error_message() << '\n';
  return status == CJ_ERR_INTERNAL ? kExitInternal : kExitInvalid;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Values from a JSON config file; flags given on the command line win.
void apply_config_file(const std::string& path, RunConfig& cfg, const CLI::App& cmd) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) throw UsageError("config file must hold a JSON object");
  auto unset = [&](const char* flag) {
    const auto* opt = cmd.get_option_no_throw(flag);
    return opt == nullptr || opt->count() == 0;
  };
  try {
    for (const auto& [key, value] : doc.items()) {
      if (key == "input") {
        if (unset("--input")) cfg.input = value.get<std::string>();
      } else if (key == "positive") {
        if (unset("--positive")) cfg.positive = value.get<std::string>();
      } else if (key == "b") {
        if (unset("--b")) cfg.replicates = value.get<std::uint32_t>();
      } else if (key == "seed") {
        if (unset("--seed")) cfg.seed = value.get<std::uint64_t>();
      } else if (key == "level") {
        if (unset("--level")) cfg.level = value.get<double>();
      } else if (key == "metrics") {
        if (unset("--metrics")) {
          cfg.metrics = value.is_string() ? split_list(value.get<std::string>())
                                          : value.get<std::vector<std::string>>();
        }
      } else if (key == "out") {
        if (unset("--out")) cfg.out = value.get<std::string>();
      } else if (key == "threads") {
        if (unset("--threads")) cfg.threads = value.get<unsigned>();
      } else if (key == "pairs") {
        if (unset("--pairs")) cfg.pairs = value.get<std::vector<std::string>>();
      } else {
        throw UsageError("config file: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
}

unsigned resolve_threads(const RunConfig& cfg) {
  if (cfg.threads) return *cfg.threads;
  if (const char* env = std::getenv("CHALLENGE_JUDGE_THREADS"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string_view(env).size()) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("CHALLENGE_JUDGE_THREADS='") + env + "' is not a thread count");
  }
  return 0;
}

unsigned metric_mask(const std::vector<std::string>& metrics) {
  if (metrics.empty()) throw UsageError("--metrics must name at least one metric");
  unsigned mask = 0;
  for (const auto& m : metrics) {
    if (m == "precision") mask |= CJ_MASK(CJ_METRIC_PRECISION);
    else if (m == "recall") mask |= CJ_MASK(CJ_METRIC_RECALL);
    else if (m == "f1") mask |= CJ_MASK(CJ_METRIC_F1);
    else throw UsageError("unknown metric '" + m + "' (expected precision, recall, f1)");
  }
  return mask;
}

void check_run_config(const RunConfig& cfg, bool needs_out) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  if (cfg.positive.empty()) throw UsageError("--positive is required");
  if (needs_out && cfg.out.empty()) throw UsageError("--out is required");
  if (cfg.replicates < kMinReplicates) {
    throw UsageError("--b must be at least " + std::to_string(kMinReplicates));
  }
  if (!(cfg.level >= 0.5 && cfg.level < 1.0)) throw UsageError("--level must lie in [0.5, 1)");
  metric_mask(cfg.metrics);
}

void write_manifest(const RunConfig& cfg, const std::string& input_hash) {
  nlohmann::ordered_json m;
  m["tool"] = "challenge-judge";
  m["version"] = cj_version();
  m["command"] = "analyze";
  auto& c = m["config"];
  c["input"] = cfg.input;
  c["positive"] = cfg.positive;
  c["b"] = cfg.replicates;
  c["seed"] = cfg.seed;
  c["level"] = cfg.level;
  c["metrics"] = cfg.metrics;
  c["pairs"] = cfg.pairs;
  m["input_sha256"] = input_hash;
  const auto path = std::filesystem::path(cfg.out) / "manifest.json";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << m.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

int run_analyze(const RunConfig& cfg) {
  check_run_config(cfg, true);
  const unsigned threads = resolve_threads(cfg);
  std::string pairs;
  for (const auto& p : cfg.pairs) pairs += (pairs.empty() ? "" : ",") + p;

  Handles h;
  if (auto s = cj_dataset_load_csv(cfg.input.c_str(), cfg.positive.c_str(), &h.ds); s != CJ_OK) {
    return report_failure(s, "loading " + cfg.input);
  }
  char hash[65];
  if (auto s = cj_sha256_file(cfg.input.c_str(), hash); s != CJ_OK) {
    return report_failure(s, "hashing " + cfg.input);
  }

  cj_analysis_options opts;
  cj_analysis_options_init(&opts);
  opts.replicates = cfg.replicates;
  opts.seed = cfg.seed;
  opts.level = cfg.level;
  opts.metrics = metric_mask(cfg.metrics);
  opts.threads = threads;
  opts.pairs = pairs.empty() ? nullptr : pairs.c_str();
  if (auto s = cj_analyze(h.ds, &opts, &h.report); s != CJ_OK) {
    return report_failure(s, "analysis");
  }
  if (auto s = cj_report_emit(h.report, cfg.out.c_str()); s != CJ_OK) {
    std::cerr << "challenge-judge: writing " << cfg.out << ": " << cj_last_error_message() << '\n';
    return kExitInternal;
  }
  write_manifest(cfg, hash);
  std::cout << "analyzed " << cj_dataset_size(h.ds) << " examples, "
            << cj_dataset_team_count(h.ds) << " teams, " << cfg.replicates
            << " replicates -> " << cfg.out << '\n';
  return kExitOk;
}

int run_validate(const RunConfig& cfg) {
  if (cfg.input.empty()) throw UsageError("--input is required");
  if (cfg.positive.empty()) throw UsageError("--positive is required");
  Handles h;
  if (auto s = cj_dataset_load_csv(cfg.input.c_str(), cfg.positive.c_str(), &h.ds); s != CJ_OK) {
    return report_failure(s, "validating " + cfg.input);
  }
  const std::size_t teams = cj_dataset_team_count(h.ds);
  std::cout << cfg.input << ": " << cj_dataset_size(h.ds) << " examples, " << teams
            << " teams, positive class '" << cj_dataset_positive(h.ds) << "'\n";
  for (std::size_t t = 0; t < teams; ++t) {
    std::uint64_t c[4];
    cj_dataset_confusion(h.ds, t, c);
    std::cout << "  " << cj_dataset_team_name(h.ds, t) << ": tp=" << c[0] << " fp=" << c[1]
              << " fn=" << c[2] << " tn=" << c[3] << '\n';
  }
  return kExitOk;
}

int run_reconstruct(const std::string& spec, std::uint64_t seed, const std::string& out) {
  Handles h;
  if (auto s = cj_dataset_reconstruct(spec.c_str(), seed, &h.ds); s != CJ_OK) {
    return report_failure(s, "reconstructing from " + spec);
  }
  if (auto s = cj_dataset_save_csv(h.ds, out.c_str()); s != CJ_OK) {
    std::cerr << "challenge-judge: writing " << out << ": " << cj_last_error_message() << '\n';
    return kExitInternal;
  }
  std::cout << "wrote " << cj_dataset_size(h.ds) << " examples, " << cj_dataset_team_count(h.ds)
            << " teams -> " << out << '\n';
  return kExitOk;
}

void add_input_options(CLI::App& cmd, RunConfig& cfg, std::string& config_path) {
  cmd.add_option("--input", cfg.input, "Wide CSV: id,gold,<team...>");
  cmd.add_option("--positive", cfg.positive, "Positive class label");
  cmd.add_option("--config", config_path, "JSON config file; flags take precedence");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired bootstrap comparison of challenge submissions", "challenge-judge"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cj_version()));

  RunConfig cfg;
  std::string config_path;
  std::string metrics_flag;

  auto* analyze = app.add_subcommand("analyze", "Run the full comparison and write reports");
  add_input_options(*analyze, cfg, config_path);
  analyze->add_option("--b", cfg.replicates, "Bootstrap replicates (>= 100)");
  analyze->add_option("--seed", cfg.seed, "Resampling seed");
  analyze->add_option("--level", cfg.level, "Confidence level in [0.5, 1)");
  analyze->add_option("--metrics", metrics_flag, "Comma-separated subset of precision,recall,f1");
  analyze->add_option("--out", cfg.out, "Output directory");
  analyze->add_option("--threads", cfg.threads, "Worker threads (default: machine parallelism)");
  analyze->add_option("--pairs", cfg.pairs, "Histogram pairs TEAM_A:TEAM_B (repeatable)")
      ->delimiter(',');

  auto* validate = app.add_subcommand("validate", "Check an input file without analysing it");
  add_input_options(*validate, cfg, config_path);

  std::string spec_path;
  std::string recon_out;
  std::uint64_t recon_seed = 42;
  auto* reconstruct =
      app.add_subcommand("reconstruct", "Build a dataset from per-team confusion counts");
  reconstruct->add_option("--spec", spec_path, "JSON reconstruction spec")->required();
  reconstruct->add_option("--seed", recon_seed, "Placement seed");
  reconstruct->add_option("--out", recon_out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*reconstruct) return run_reconstruct(spec_path, recon_seed, recon_out);
    CLI::App* cmd = *analyze ? analyze : validate;
    if (!config_path.empty()) apply_config_file(config_path, cfg, *cmd);
    if (!metrics_flag.empty()) cfg.metrics = split_list(metrics_flag);
    if (*analyze) return run_analyze(cfg);
    return run_validate(cfg);
  } catch (const UsageError& e) {
    std::cerr << "challenge-judge: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "challenge-judge: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
