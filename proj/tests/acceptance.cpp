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
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli_runner.hpp"
#include "dataset.hpp"
#include "inference.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "resampling.hpp"
#include "svg_probe.hpp"

using namespace cjudge;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

const fs::path kSpecPath = fs::path(CJ_DATA_DIR) / "offendmex_table1.json";
constexpr std::uint64_t kReconstructionSeed = 42;
constexpr std::uint64_t kResampleSeed = 42;

// Published per-team precision, recall, F1.
const std::map<std::string, std::array<double, 3>> kTable1 = {
    {"NLPCIC", {0.7208, 0.7100, 0.7154}},      {"CIMATMTYGTO", {0.6533, 0.7600, 0.7026}},
    {"DCCDINFOTEC", {0.6966, 0.6733, 0.6847}}, {"CIMATGTO", {0.6958, 0.6633, 0.6792}},
    {"UMUTeam", {0.6763, 0.6650, 0.6706}},     {"Timen", {0.6081, 0.6000, 0.6040}},
    {"CICIPN", {0.6874, 0.5350, 0.6017}},      {"xjywing", {0.3419, 0.8883, 0.4937}},
    {"aomar", {0.3241, 0.8750, 0.4730}},       {"CENAmrita", {0.3145, 0.9183, 0.4685}},
};

// Published 95% percentile intervals, per metric.
using IntervalTable = std::map<std::string, std::pair<double, double>>;
const std::array<IntervalTable, 3> kTable2 = {{
    {{"NLPCIC", {0.6844, 0.7572}}, {"DCCDINFOTEC", {0.6585, 0.7345}}, {"CIMATGTO", {0.6578, 0.7338}},
     {"CICIPN", {0.6458, 0.7290}}, {"UMUTeam", {0.6381, 0.7143}}, {"CIMATMTYGTO", {0.6175, 0.6888}},
     {"Timen", {0.5691, 0.6474}}, {"xjywing", {0.3182, 0.3656}}, {"aomar", {0.3011, 0.3470}},
     {"CENAmrita", {0.2926, 0.3364}}},
    {{"CENAmrita", {0.8962, 0.9402}}, {"xjywing", {0.8632, 0.9134}}, {"aomar", {0.8485, 0.9015}},
     {"CIMATMTYGTO", {0.7260, 0.7935}}, {"NLPCIC", {0.6739, 0.7458}}, {"DCCDINFOTEC", {0.6351, 0.7112}},
     {"UMUTeam", {0.6269, 0.7025}}, {"CIMATGTO", {0.6255, 0.7011}}, {"Timen", {0.5608, 0.6392}},
     {"CICIPN", {0.4946, 0.5751}}},
    {{"NLPCIC", {0.6864, 0.7438}}, {"CIMATMTYGTO", {0.6739, 0.7306}}, {"DCCDINFOTEC", {0.6536, 0.7152}},
     {"CIMATGTO", {0.6481, 0.7098}}, {"UMUTeam", {0.6393, 0.7011}}, {"Timen", {0.5713, 0.6365}},
     {"CICIPN", {0.5665, 0.6363}}, {"xjywing", {0.4676, 0.5196}}, {"aomar", {0.4470, 0.4987}},
     {"CENAmrita", {0.4433, 0.4935}}},
}};

std::vector<ScoreDistribution> all_distributions(const LabeledDataset& ds, MetricKind m,
                                                 const ResamplePlan& plan,
                                                 const ReplicateCounts& counts) {
  std::vector<ScoreDistribution> out;
  for (std::size_t t = 0; t < ds.team_count(); ++t) {
    out.push_back(distribution_from_counts(ds, t, m, counts[t]));
  }
  (void)plan;
  return out;
}

// 1. Exact per-team scores from the reconstruction.
Verdict table1() {
  const auto t0 = Clock::now();
  const auto ds = reconstruct(load_reconstruction_spec(kSpecPath), kReconstructionSeed);
  const auto scores = point_estimates(ds);
  const double elapsed = seconds_since(t0);
  std::size_t matched = 0;
  double worst = 0;
  for (const auto& s : scores) {
    const auto& want = kTable1.at(s.team);
    for (int m = 0; m < 3; ++m) {
      const double err = std::abs(round4(s.scores[m].value) - want[m]);
      worst = std::max(worst, err);
      if (err <= 1e-4 + 1e-12) ++matched;
    }
  }
  return {matched == 30 && scores.size() == 10 && elapsed < 1.0,
          fmt("%zu/30 values within 0.0001 (max error %.4f), %.3f s (limit 1 s)", matched, worst,
              elapsed)};
}

// 2. Marginal percentile intervals at b=10000.
Verdict table2() {
  const auto ds = reconstruct(load_reconstruction_spec(kSpecPath), kReconstructionSeed);
  const auto t0 = Clock::now();
  const ResamplePlan plan(static_cast<std::uint32_t>(ds.size()), 10000, kResampleSeed);
  const auto counts = replicate_counts(ds, plan, 0);
  std::size_t matched = 0, total = 0;
  double worst = 0;
  std::string worst_at;
  for (int m = 0; m < 3; ++m) {
    const auto dists = all_distributions(ds, kAllMetrics[m], plan, counts);
    for (const auto& d : dists) {
      const auto ci = percentile_ci(d, 0.95);
      const auto& want = kTable2[m].at(d.team);
      for (auto [got, pub] : {std::pair{ci.lower, want.first}, std::pair{ci.upper, want.second}}) {
        ++total;
        const double err = std::abs(got - pub);
        if (err > worst) {
          worst = err;
          worst_at = std::string(metric_name(kAllMetrics[m])) + "/" + d.team;
        }
        if (err <= 0.010) ++matched;
      }
    }
  }
  const double elapsed = seconds_since(t0);
  return {matched == 60 && total == 60 && elapsed < 10.0,
          fmt("%zu/%zu endpoints within 0.010 (max error %.4f at %s), %.2f s (limit 10 s)", matched,
              total, worst, worst_at.c_str(), elapsed)};
}

// 3a. A team against its own clone.
bool clone_check(std::string& detail) {
  const auto spec = load_reconstruction_spec(kSpecPath);
  const auto base = reconstruct(spec, kReconstructionSeed);
  auto teams = base.teams();
  teams.push_back({"NLPCIC_clone", base.teams()[0].labels});
  const LabeledDataset ds(base.ids(), base.gold(), teams, base.positive());
  const ResamplePlan plan(static_cast<std::uint32_t>(ds.size()), 2000, kResampleSeed);
  bool ok = true;
  for (auto m : kAllMetrics) {
    const auto a = distribution(ds, "NLPCIC", m, plan);
    const auto b = distribution(ds, "NLPCIC_clone", m, plan);
    const auto r = paired_difference_result(a, b, 0.95);
    const auto p = p_value(paired_difference(a, b), r.delta);
    ok = ok && r.ci.lower == 0.0 && r.ci.upper == 0.0 && p.p == 1.0 && r.contains_zero;
  }
  detail = ok ? "clone CI (0,0) p=1" : "clone CI or p wrong";
  return ok;
}

// 3b. Toy data against the exhaustive 27-resample enumeration.
bool toy_check(std::string& detail) {
  const std::vector<int> gold{1, 1, 0}, pa{1, 1, 0}, pb{1, 1, 1};
  auto label = [](int v) { return std::string(v ? "pos" : "neg"); };
  std::vector<std::string> g, a, b;
  for (int i = 0; i < 3; ++i) {
    g.push_back(label(gold[i]));
    a.push_back(label(pa[i]));
    b.push_back(label(pb[i]));
  }
  const LabeledDataset ds({"1", "2", "3"}, g, {{"A", a}, {"B", b}}, "pos");
  constexpr std::uint32_t kB = 20000;
  const ResamplePlan plan(3, kB, 20260);

  auto pick = [](const oracle::Metrics& x, int m) {
    return m == 0 ? x.precision : m == 1 ? x.recall : x.f1;
  };
  bool ok = true;
  int exceed_checks = 0;
  double worst_z = 0;
  for (int m = 0; m < 3; ++m) {
    const double delta_raw = pick(oracle::metrics(gold, pa), m) - pick(oracle::metrics(gold, pb), m);
    const double sign = delta_raw < 0 ? -1.0 : 1.0;
    const double delta = std::abs(delta_raw);
    std::vector<double> exact;
    oracle::enumerate_resamples(3, [&](const std::vector<std::size_t>& idx) {
      const auto g2 = oracle::take(gold, idx);
      exact.push_back(sign * (pick(oracle::metrics(g2, oracle::take(pa, idx)), m) -
                              pick(oracle::metrics(g2, oracle::take(pb, idx)), m)));
    });
    const double mean = std::accumulate(exact.begin(), exact.end(), 0.0) / 27.0;
    double var = 0;
    for (double x : exact) var += (x - mean) * (x - mean);
    var /= 27.0;

    const auto da = distribution(ds, sign > 0 ? "A" : "B", kAllMetrics[m], plan);
    const auto db = distribution(ds, sign > 0 ? "B" : "A", kAllMetrics[m], plan);
    const auto diffs = paired_difference(da, db);
    const double mc_mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / kB;
    const double se_mean = std::sqrt(var / kB);
    if (se_mean == 0) {
      ok = ok && mc_mean == mean;
    } else {
      worst_z = std::max(worst_z, std::abs(mc_mean - mean) / se_mean);
      ok = ok && std::abs(mc_mean - mean) <= 3 * se_mean;
    }

    if (delta == 0) continue;  // p is pinned to 1 at zero difference
    // Resamples landing exactly on 2*delta are counted either way by rounding;
    // the Monte Carlo fraction must fall in the resulting bracket.
    double strict = 0, loose = 0;
    for (double x : exact) {
      if (x > 2 * delta + 1e-9) strict += 1;
      if (x > 2 * delta - 1e-9) loose += 1;
    }
    strict /= 27.0;
    loose /= 27.0;
    const auto p = p_value(diffs, delta);
    const double frac = static_cast<double>(p.b_exceed) / kB;
    const double se_lo = std::sqrt(strict * (1 - strict) / kB);
    const double se_hi = std::sqrt(loose * (1 - loose) / kB);
    const bool in = frac >= strict - 3 * se_lo && frac <= loose + 3 * se_hi;
    ok = ok && in;
    ++exceed_checks;
  }
  detail = fmt("toy means max |z|=%.2f, %d exceedance checks %s", worst_z, exceed_checks,
               ok ? "within 3 SE" : "outside 3 SE");
  return ok && exceed_checks >= 2;
}

// 3c. CI excludes zero on the positive side => small shifted-null p-value.
bool duality_check(std::string& detail) {
  std::mt19937_64 rng(2026);
  auto uniform_int = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  constexpr std::uint32_t kB = 2000;
  constexpr double kLevel = 0.95;
  const double bound = (1 - kLevel) / 2 + 1.0 / (kB + 1);
  std::size_t premise = 0, violations = 0, comparisons = 0;
  double worst_p = 0;
  std::string first_violation;
  for (int pair = 0; pair < 100; ++pair) {
    ReconstructionSpec spec;
    spec.n_pos = uniform_int(50, 600);
    spec.n_neg = uniform_int(50, 1500);
    const auto tp_a = uniform_int(spec.n_pos / 3, spec.n_pos);
    const auto fp_a = uniform_int(0, spec.n_neg / 2);
    const auto spread_p = std::max<std::uint64_t>(1, spec.n_pos / 8);
    const auto spread_n = std::max<std::uint64_t>(1, spec.n_neg / 8);
    const auto tp_b = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(tp_a) + static_cast<std::int64_t>(uniform_int(0, 2 * spread_p)) -
            static_cast<std::int64_t>(spread_p),
        0, static_cast<std::int64_t>(spec.n_pos));
    const auto fp_b = std::clamp<std::int64_t>(
        static_cast<std::int64_t>(fp_a) + static_cast<std::int64_t>(uniform_int(0, 2 * spread_n)) -
            static_cast<std::int64_t>(spread_n),
        0, static_cast<std::int64_t>(spec.n_neg));
    spec.teams = {{"a", tp_a, fp_a},
                  {"b", static_cast<std::uint64_t>(tp_b), static_cast<std::uint64_t>(fp_b)}};
    const auto ds = reconstruct(spec, 1000 + pair);
    const ResamplePlan plan(static_cast<std::uint32_t>(ds.size()), kB, 7000 + pair);
    const auto counts = replicate_counts(ds, plan, 0);
    for (auto m : kAllMetrics) {
      auto d0 = distribution_from_counts(ds, 0, m, counts[0]);
      auto d1 = distribution_from_counts(ds, 1, m, counts[1]);
      if (d0.point.value < d1.point.value) std::swap(d0, d1);
      const auto r = paired_difference_result(d0, d1, kLevel);
      ++comparisons;
      if (!(r.ci.lower > 0)) continue;
      ++premise;
      const auto p = p_value(paired_difference(d0, d1), r.delta);
      worst_p = std::max(worst_p, p.p);
      if (!(p.p < bound)) {
        if (violations++ == 0) {
          const auto diffs = paired_difference(d0, d1);
          const auto at_or_below_zero = std::count_if(diffs.begin(), diffs.end(), [](double x) { return x <= 0; });
          first_violation = fmt(
              "; violation: pair %d %s delta=%.5f mean=%.5f lower=%.5f, %zu replicates <= 0 vs %zu > 2*delta",
              pair, std::string(metric_name(m)).c_str(), r.delta, r.mean, r.ci.lower,
              static_cast<std::size_t>(at_or_below_zero), p.b_exceed);
        }
      }
    }
  }
  detail = fmt("duality %zu/%zu implications hold over %zu comparisons (max p %.4f, bound %.4f)",
               premise - violations, premise, comparisons, worst_p, bound) + first_violation;
  return violations == 0 && premise > 0;
}

Verdict properties() {
  std::string a, b, c;
  const bool ok_a = clone_check(a);
  const bool ok_b = toy_check(b);
  const bool ok_c = duality_check(c);
  return {ok_a && ok_b && ok_c, "(a) " + a + "; (b) " + b + "; (c) " + c};
}

// 4. Direction of the two highlighted F1 comparisons across reconstructions.
Verdict direction() {
  const auto spec = load_reconstruction_spec(kSpecPath);
  double lo1 = 1, hi1 = 0, lo2 = 1, hi2 = 0;
  bool ok = true;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto ds = reconstruct(spec, seed);
    const ResamplePlan plan(static_cast<std::uint32_t>(ds.size()), 10000, kResampleSeed);
    const auto best = distribution(ds, "NLPCIC", MetricKind::F1, plan, 0);
    auto p_against = [&](const char* other) {
      const auto d = distribution(ds, other, MetricKind::F1, plan, 0);
      return p_value(paired_difference(best, d), best.point.value - d.point.value).p;
    };
    const double p1 = p_against("CIMATMTYGTO");
    const double p2 = p_against("DCCDINFOTEC");
    lo1 = std::min(lo1, p1);
    hi1 = std::max(hi1, p1);
    lo2 = std::min(lo2, p2);
    hi2 = std::max(hi2, p2);
    ok = ok && p1 > 0.05 && p1 < 0.5 && p2 > 0.001 && p2 < 0.1;
  }
  return {ok, fmt("vs CIMATMTYGTO p in [%.4f, %.4f] (need (0.05, 0.5)); vs DCCDINFOTEC p in "
                  "[%.4f, %.4f] (need (0.001, 0.1)); 10 seeds",
                  lo1, hi1, lo2, hi2)};
}

// 5. Coverage of the percentile interval in a Bernoulli world.
Verdict coverage() {
  constexpr std::size_t kN = 500, kDatasets = 1000;
  constexpr std::uint32_t kB = 2000;
  constexpr double kPrevalence = 0.3, kTpr = 0.7, kFpr = 0.1;
  const double true_recall = kTpr;
  const double true_precision = kPrevalence * kTpr / (kPrevalence * kTpr + (1 - kPrevalence) * kFpr);

  const auto t0 = Clock::now();
  std::mt19937_64 rng(5150);
  std::bernoulli_distribution is_pos(kPrevalence), hit(kTpr), false_alarm(kFpr);
  std::vector<std::string> ids(kN);
  for (std::size_t i = 0; i < kN; ++i) ids[i] = std::to_string(i + 1);
  std::size_t cover_p = 0, cover_r = 0;
  for (std::size_t k = 0; k < kDatasets; ++k) {
    std::vector<std::string> gold(kN), pred(kN);
    for (std::size_t i = 0; i < kN; ++i) {
      const bool g = is_pos(rng);
      const bool p = g ? hit(rng) : false_alarm(rng);
      gold[i] = g ? "1" : "0";
      pred[i] = p ? "1" : "0";
    }
    const LabeledDataset ds(ids, gold, {{"sys", pred}}, "1");
    const ResamplePlan plan(kN, kB, 90000 + k);
    const auto counts = replicate_counts(ds, plan, 0);
    const auto pci = percentile_ci(distribution_from_counts(ds, 0, MetricKind::Precision, counts[0]), 0.95);
    const auto rci = percentile_ci(distribution_from_counts(ds, 0, MetricKind::Recall, counts[0]), 0.95);
    if (pci.lower <= true_precision && true_precision <= pci.upper) ++cover_p;
    if (rci.lower <= true_recall && true_recall <= rci.upper) ++cover_r;
  }
  const double elapsed = seconds_since(t0);
  const double cp = static_cast<double>(cover_p) / kDatasets;
  const double cr = static_cast<double>(cover_r) / kDatasets;
  auto in_band = [](double c) { return c >= 0.93 - 1e-12 && c <= 0.97 + 1e-12; };
  return {in_band(cp) && in_band(cr) && elapsed < 120.0,
          fmt("precision coverage %.3f, recall coverage %.3f (need 0.95 +/- 0.02), %.1f s (limit 120 s)",
              cp, cr, elapsed)};
}

struct CliRun {
  fs::path first, second, eight;
  bool ok = false;
  std::string error;
};

const CliRun& cli_outputs() {
  static const CliRun run = [] {
    CliRun r;
    const auto root = fs::temp_directory_path() / "cj_acceptance";
    fs::remove_all(root);
    fs::create_directories(root);
    const auto csv = root / "table1.csv";
    auto rec = cli_runner::run("reconstruct --spec " + cli_runner::quote(kSpecPath.string()) +
                               " --out " + cli_runner::quote(csv.string()));
    if (rec.exit_code != 0) {
      r.error = "reconstruct failed: " + rec.output;
      return r;
    }
    r.first = root / "run1";
    r.second = root / "run2";
    r.eight = root / "run8";
    const std::string base = "analyze --input " + cli_runner::quote(csv.string()) +
                             " --positive offensive --seed 42 --b 10000 --out ";
    for (auto [dir, threads] : {std::pair{r.first, 1}, std::pair{r.second, 1}, std::pair{r.eight, 8}}) {
      auto a = cli_runner::run(base + cli_runner::quote(dir.string()) + " --threads " +
                               std::to_string(threads));
      if (a.exit_code != 0) {
        r.error = "analyze failed: " + a.output;
        return r;
      }
    }
    r.ok = true;
    return r;
  }();
  return run;
}

// 6. Byte-identical output directories.
Verdict determinism() {
  const auto& r = cli_outputs();
  if (!r.ok) return {false, r.error};
  std::string d1, d2;
  const bool same = cli_runner::same_tree(r.first, r.second, &d1);
  const bool threads = cli_runner::same_tree(r.first, r.eight, &d2);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(r.first)) ++files;
  return {same && threads && files > 0,
          fmt("%zu files; repeat run %s; --threads 1 vs 8 %s", files,
              same ? "identical" : ("differs at " + d1).c_str(),
              threads ? "identical" : ("differs at " + d2).c_str())};
}

// 7. Red bars in the difference plot are exactly the zero-containing intervals.
Verdict plot_contract() {
  const auto& r = cli_outputs();
  if (!r.ok) return {false, r.error};
  const auto report = nlohmann::json::parse(cli_runner::slurp(r.first / "report.json"));
  std::vector<svg_probe::Element> svg;
  try {
    svg = svg_probe::parse(cli_runner::slurp(r.first / "fig2_differences.svg"));
  } catch (const std::exception& e) {
    return {false, std::string("fig2 is not well-formed XML: ") + e.what()};
  }
  const auto bars = svg_probe::select(svg, "line", "interval");
  std::size_t expected = 0, matched = 0, red = 0, mismatched = 0;
  for (const auto& sec : report["metrics"]) {
    const std::string metric = sec["metric"];
    for (const auto& d : sec["differences_from_best"]) {
      ++expected;
      const std::string team = d["team_b"];
      const bool contains_zero = d["contains_zero"];
      for (const auto& b : bars) {
        if (b.panel_metric != metric || b.attr("data-team") != team) continue;
        ++matched;
        const bool is_red = b.attr("stroke") == "#d62728";
        const bool is_green = b.attr("stroke") == "#2ca02c";
        if (is_red) ++red;
        if (is_red != contains_zero || is_red == is_green) ++mismatched;
      }
    }
  }
  return {expected > 0 && matched == expected && bars.size() == expected && mismatched == 0,
          fmt("%zu bars, %zu matched to report entries, %zu red, %zu colour mismatches", bars.size(),
              matched, red, mismatched)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria = {
      {"1 per-team scores reproduce the published table", table1},
      {"2 marginal percentile intervals reproduce the published table", table2},
      {"3 paired-difference properties (clone, exhaustive toy oracle, CI/p duality)", properties},
      {"4 significance direction across reconstruction seeds", direction},
      {"5 percentile interval coverage in a Bernoulli world", coverage},
      {"6 analyze output is byte-identical across runs and thread counts", determinism},
      {"7 difference plot colours match zero containment in the report", plot_contract},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s  [%s] %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
