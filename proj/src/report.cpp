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
#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "error.hpp"
#include "svg.hpp"

namespace cjudge {

using nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Histograms

std::size_t histogram_bin_count(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "histogram of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double range = sorted.back() - sorted.front();
  if (range == 0.0) return 1;
  const double iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
  if (iqr <= 0.0) return 10;
  const double width = 2.0 * iqr / std::cbrt(static_cast<double>(sorted.size()));
  const auto bins = static_cast<std::size_t>(std::ceil(range / width));
  return std::clamp<std::size_t>(bins, 10, kMaxHistogramBins);
}

Histogram make_histogram(std::span<const double> values) {
  const std::size_t bins = histogram_bin_count(values);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  Histogram h;
  h.counts.assign(bins, 0);
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) h.edges[i] = lo + width * static_cast<double>(i);
  h.edges.back() = hi;
  for (double v : values) {
    std::size_t bin = width > 0.0 ? static_cast<std::size_t>((v - lo) / width) : 0;
    ++h.counts[std::min(bin, bins - 1)];
  }
  return h;
}

PairHistogram make_pair_histogram(const ScoreDistribution& a, const ScoreDistribution& b) {
  auto diffs = paired_difference(a, b);
  PairHistogram ph;
  ph.metric = a.metric;
  ph.team_a = a.team;
  ph.team_b = b.team;
  ph.delta = a.point.value - b.point.value;
  ph.p = p_value(diffs, ph.delta);
  double sum = 0.0;
  for (double d : diffs) sum += d;
  ph.mean = sum / static_cast<double>(diffs.size());
  ph.histogram = make_histogram(diffs);
  std::sort(diffs.begin(), diffs.end());
  ph.median = sorted_quantile(diffs, 0.5);
  return ph;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

ordered_json num(double v) {
  ordered_json j;
  j["value"] = v;
  j["display"] = format4(v);
  return j;
}

ordered_json score_json(const Score& s) {
  ordered_json j = num(s.value);
  j["defined"] = s.defined;
  return j;
}

std::string sanitize(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '-' || c == '_';
    out += keep ? c : '_';
  }
  return out;
}

}  // namespace

std::string histogram_file_name(const PairHistogram& h) {
  return "fig3_" + sanitize(h.team_a) + "_vs_" + sanitize(h.team_b) + ".svg";
}

ordered_json to_json(const ComparisonReport& r) {
  ordered_json j;
  auto& cfg = j["config"];
  cfg["replicates"] = r.config.replicates;
  cfg["seed"] = r.config.seed;
  cfg["level"] = r.config.level;
  cfg["positive"] = r.config.positive;
  cfg["metrics"] = ordered_json::array();
  for (MetricKind m : r.config.metrics) cfg["metrics"].push_back(metric_name(m));
  cfg["p_value_rule"] = "one-sided shifted null: (#{diff > 2 delta} + 1) / (b + 1)";
  cfg["star_thresholds"] = {{"†", 0.1}, {"*", 0.05}, {"**", 0.01}, {"***", 0.001}};

  j["examples"] = r.examples;
  j["teams"] = ordered_json::array();
  for (const auto& p : r.points) j["teams"].push_back(p.team);

  j["point_estimates"] = ordered_json::array();
  for (const auto& p : r.points) {
    ordered_json row;
    row["team"] = p.team;
    row["tp"] = p.counts.tp;
    row["fp"] = p.counts.fp;
    row["fn"] = p.counts.fn;
    row["tn"] = p.counts.tn;
    for (MetricKind m : kAllMetrics) row[std::string(metric_name(m))] = score_json(p[m]);
    j["point_estimates"].push_back(std::move(row));
  }

  j["metrics"] = ordered_json::array();
  for (const auto& s : r.sections) {
    ordered_json sec;
    sec["metric"] = metric_name(s.metric);
    sec["ordered_intervals"] = ordered_json::array();
    for (std::size_t i = 0; i < s.ordered.size(); ++i) {
      const auto& oi = s.ordered[i];
      sec["ordered_intervals"].push_back({{"rank", i + 1},
                                          {"team", oi.team},
                                          {"point", num(oi.ci.point)},
                                          {"lower", num(oi.ci.lower)},
                                          {"upper", num(oi.ci.upper)}});
    }
    sec["best"] = s.best;
    sec["differences_from_best"] = ordered_json::array();
    for (const auto& d : s.differences) {
      sec["differences_from_best"].push_back({{"team_a", d.team_a},
                                              {"team_b", d.team_b},
                                              {"delta", num(d.delta)},
                                              {"lower", num(d.ci.lower)},
                                              {"mean", num(d.mean)},
                                              {"upper", num(d.ci.upper)},
                                              {"contains_zero", d.contains_zero}});
    }
    if (s.stars) {
      ordered_json sm;
      sm["teams"] = s.stars->teams;
      sm["cells"] = ordered_json::array();
      for (const auto& c : s.stars->cells) {
        sm["cells"].push_back({{"row_team", s.stars->teams[c.row]},
                               {"column_team", s.stars->teams[c.column]},
                               {"delta", num(c.delta)},
                               {"exceed", c.p.b_exceed},
                               {"p_value", num(c.p.p)},
                               {"two_sided_p_value", num(two_sided(c.p.p))},
                               {"stars", c.stars}});
      }
      sec["star_matrix"] = std::move(sm);
    } else {
      sec["star_matrix"] = nullptr;
    }
    ordered_json deg = ordered_json::object();
    for (const auto& [team, count] : s.degenerate) deg[team] = count;
    sec["degenerate_replicates"] = std::move(deg);
    j["metrics"].push_back(std::move(sec));
  }

  j["histograms"] = ordered_json::array();
  for (const auto& h : r.histograms) {
    j["histograms"].push_back({{"metric", metric_name(h.metric)},
                               {"team_a", h.team_a},
                               {"team_b", h.team_b},
                               {"file", histogram_file_name(h)},
                               {"delta", num(h.delta)},
                               {"mean", num(h.mean)},
                               {"median", num(h.median)},
                               {"exceed", h.p.b_exceed},
                               {"p_value", num(h.p.p)},
                               {"two_sided_p_value", num(two_sided(h.p.p))},
                               {"edges", h.histogram.edges},
                               {"counts", h.histogram.counts}});
  }
  return j;
}

std::string report_json_text(const ComparisonReport& r) { return to_json(r).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Tables

namespace {

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot write '" + path.string() + "'");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorCode::IoFailure, "write to '" + path.string() + "' failed");
}

std::string latex_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': case '%': case '$': case '#': case '_': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}

std::string latex_stars(std::string_view stars) {
  if (stars.empty()) return "";
  if (stars == "†") return " $\\dagger$";
  return " {\\footnotesize " + std::string(stars) + "}";
}

const char* latex_metric(MetricKind m) {
  switch (m) {
    case MetricKind::Precision: return "Precision";
    case MetricKind::Recall: return "Recall";
    case MetricKind::F1: return "$F_1$";
  }
  return "";
}

const TeamScores& find_points(const ComparisonReport& r, std::string_view team) {
  for (const auto& p : r.points) {
    if (p.team == team) return p;
  }
  throw Error(ErrorCode::UnknownTeam, "no point estimates for '" + std::string(team) + "'");
}

void table1(const ComparisonReport& r, const MetricSection& s, const std::filesystem::path& dir) {
  const std::string m(metric_name(s.metric));
  std::ostringstream csv, tex;
  csv << "rank,team,precision,recall,f1\n";
  tex << "% Point estimates on the full dataset, ordered by " << metric_title(s.metric) << ".\n"
      << "\\begin{tabular}[t]{lrrr}\n\\hline\n"
      << "Team & precision & recall & $F_1$\\\\\n\\hline\n";
  for (std::size_t i = 0; i < s.ordered.size(); ++i) {
    const auto& p = find_points(r, s.ordered[i].team);
    csv << i + 1 << ',' << p.team;
    tex << latex_escape(p.team);
    for (MetricKind k : kAllMetrics) {
      csv << ',' << format4(p[k].value);
      tex << " & " << format4(p[k].value);
    }
    csv << '\n';
    tex << "\\\\\n";
  }
  tex << "\\hline\n\\end{tabular}\n";
  write_text(dir / ("table1_" + m + ".csv"), csv.str());
  write_text(dir / ("table1_" + m + ".tex"), tex.str());
}

void table2(const MetricSection& s, const std::filesystem::path& dir) {
  const std::string m(metric_name(s.metric));
  std::ostringstream csv, tex;
  csv << "rank,team,point,lower,upper\n";
  tex << "% Ordered bootstrap percentile confidence intervals, " << metric_title(s.metric) << ".\n"
      << "\\begin{tabular}[t]{lc}\n\\hline\n"
      << "\\multicolumn{2}{c}{" << latex_metric(s.metric) << "}\\\\\n"
      << "Team & CI\\\\\n\\hline\n";
  for (std::size_t i = 0; i < s.ordered.size(); ++i) {
    const auto& oi = s.ordered[i];
    csv << i + 1 << ',' << oi.team << ',' << format4(oi.ci.point) << ',' << format4(oi.ci.lower)
        << ',' << format4(oi.ci.upper) << '\n';
    tex << latex_escape(oi.team) << " & (" << format4(oi.ci.lower) << ',' << format4(oi.ci.upper)
        << ")\\\\\n";
  }
  tex << "\\hline\n\\end{tabular}\n";
  write_text(dir / ("table2_" + m + ".csv"), csv.str());
  write_text(dir / ("table2_" + m + ".tex"), tex.str());
}

void table3(const MetricSection& s, const std::filesystem::path& dir) {
  const std::string m(metric_name(s.metric));
  std::ostringstream csv, tex;
  csv << "best,team,lower,mean,upper,delta,contains_zero\n";
  tex << "% Paired bootstrap confidence intervals of differences from the best, "
      << metric_title(s.metric) << ".\n"
      << "\\begin{tabular}[t]{lrrr}\n\\hline\n"
      << "\\multicolumn{4}{c}{" << latex_metric(s.metric) << "}\\\\\n"
      << "\\multicolumn{4}{c}{" << latex_escape(s.best) << "}\\\\\n"
      << "Team & ICI & Mean & SCI\\\\\n\\hline\n";
  for (const auto& d : s.differences) {
    csv << d.team_a << ',' << d.team_b << ',' << format4(d.ci.lower) << ',' << format4(d.mean)
        << ',' << format4(d.ci.upper) << ',' << format4(d.delta) << ','
        << (d.contains_zero ? "true" : "false") << '\n';
    tex << latex_escape(d.team_b) << " & " << format4(d.ci.lower) << " & " << format4(d.mean)
        << " & " << format4(d.ci.upper) << "\\\\\n";
  }
  tex << "\\hline\n\\end{tabular}\n";
  write_text(dir / ("table3_" + m + ".csv"), csv.str());
  write_text(dir / ("table3_" + m + ".tex"), tex.str());
}

void table4(const MetricSection& s, const std::filesystem::path& dir) {
  const std::string m(metric_name(s.metric));
  std::ostringstream csv, tex;
  csv << "row_team,column_team,delta,p_value,two_sided_p_value,stars\n";
  tex << "% Differences of " << metric_title(s.metric)
      << " (column)-(row) and their one-sided paired bootstrap significance.\n";
  if (s.stars) {
    const auto& sm = *s.stars;
    for (const auto& c : sm.cells) {
      csv << sm.teams[c.row] << ',' << sm.teams[c.column] << ',' << format4(c.delta) << ','
          << format4(c.p.p) << ',' << format4(two_sided(c.p.p)) << ',' << c.stars << '\n';
    }
    const std::size_t cols = sm.teams.size() - 1;
    tex << "\\begin{tabular}[t]{l" << std::string(cols, 'l') << "}\n\\hline\n ";
    for (std::size_t c = 0; c < cols; ++c) tex << " & " << latex_escape(sm.teams[c]);
    tex << "\\\\\n\\hline\n";
    for (std::size_t row = 1; row < sm.teams.size(); ++row) {
      tex << latex_escape(sm.teams[row]);
      for (std::size_t c = 0; c < cols; ++c) {
        tex << " & ";
        if (const StarCell* cell = sm.cell(row, c)) tex << format4(cell->delta) << latex_stars(cell->stars);
      }
      tex << "\\\\\n";
    }
    tex << "\\hline\n\\end{tabular}\n";
  } else {
    tex << "\\begin{tabular}[t]{l}\n\\hline\n \\\\\n\\hline\n\\end{tabular}\n";
  }
  tex << "\\par\\footnotesize{Note: $\\dagger p<.1$, {\\footnotesize*}$p<.05$, "
         "{\\footnotesize**}$p<.01$\\footnote{The ** threshold is $p<.01$; a looser "
         "$p<.1$ reading would coincide with $\\dagger$.}, and "
         "{\\footnotesize***}$p<.001$.}\n";
  write_text(dir / ("table4_" + m + ".csv"), csv.str());
  write_text(dir / ("table4_" + m + ".tex"), tex.str());
}

}  // namespace

void emit_tables(const ComparisonReport& r, const std::filesystem::path& dir) {
  write_text(dir / "report.json", report_json_text(r));
  for (const auto& s : r.sections) {
    table1(r, s, dir);
    table2(s, dir);
    table3(s, dir);
    table4(s, dir);
  }
}

// ---------------------------------------------------------------------------
// Figures

namespace {

constexpr double kWidth = 1600.0;
constexpr double kHeight = 900.0;
constexpr double kTop = 90.0;
constexpr double kBottom = 820.0;
constexpr double kLabelWidth = 150.0;
constexpr double kPanelGap = 40.0;
constexpr const char* kRed = "#d62728";
constexpr const char* kGreen = "#2ca02c";
constexpr const char* kBlue = "#1f77b4";

std::string fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos && s[0] == '-') s.erase(0, 1);
  return s;
}

std::pair<double, double> padded(double lo, double hi) {
  if (hi - lo < 1e-9) return {lo - 0.05, hi + 0.05};
  const double pad = (hi - lo) * 0.06;
  return {lo - pad, hi + pad};
}

struct Panel {
  double x0, x1;  // plot area, excluding the label column
};

Panel panel_at(std::size_t i, std::size_t count) {
  const double usable = kWidth - 40.0 - kPanelGap * static_cast<double>(count - 1);
  const double width = usable / static_cast<double>(count);
  const double left = 20.0 + static_cast<double>(i) * (width + kPanelGap);
  return {left + kLabelWidth, left + width};
}

void axis(svg::Document& doc, const svg::Scale& x, const Panel& p) {
  doc.line(p.x0, kBottom, p.x1, kBottom, {{"stroke", "#333333"}, {"stroke-width", "1"}});
  for (double t : svg::ticks(x.d0, x.d1, 5)) {
    const double px = x(t);
    doc.line(px, kBottom, px, kBottom + 6, {{"stroke", "#333333"}});
    doc.line(px, kTop, px, kBottom, {{"stroke", "#e5e5e5"}, {"stroke-width", "1"}});
    doc.text(px, kBottom + 24, fixed(t, 3), {{"font-size", "14"}, {"text-anchor", "middle"}});
  }
}

struct Bar {
  std::string team;
  double lower, upper, mark;
  std::string colour;
  std::optional<bool> contains_zero;
};

void bar_panel(svg::Document& doc, MetricKind metric, std::string_view title,
               const std::vector<Bar>& bars, const Panel& p, bool zero_line) {
  double lo = bars.front().lower, hi = bars.front().upper;
  for (const auto& b : bars) {
    lo = std::min({lo, b.lower, b.mark});
    hi = std::max({hi, b.upper, b.mark});
  }
  if (zero_line) {
    lo = std::min(lo, 0.0);
    hi = std::max(hi, 0.0);
  }
  const auto [d0, d1] = padded(lo, hi);
  const svg::Scale x{d0, d1, p.x0, p.x1};
  doc.open_group({{"class", "panel"},
                  {"data-metric", std::string(metric_name(metric))},
                  {"data-title", std::string(title)}});
  doc.text((p.x0 + p.x1) / 2.0, 60, title,
           {{"font-size", "22"}, {"text-anchor", "middle"}, {"font-weight", "bold"}});
  axis(doc, x, p);
  if (zero_line) {
    doc.line(x(0.0), kTop - 10, x(0.0), kBottom,
             {{"class", "zero-line"}, {"stroke", "#000000"}, {"stroke-dasharray", "6 4"}});
  }
  const double step = (kBottom - kTop) / static_cast<double>(bars.size());
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const auto& b = bars[i];
    const double y = kTop + step * (static_cast<double>(i) + 0.5);
    doc.text(p.x0 - 10, y + 5, b.team, {{"font-size", "14"}, {"text-anchor", "end"}});
    svg::Attributes attrs{{"class", "interval"},
                          {"data-team", b.team},
                          {"data-lower", fixed(b.lower, 6)},
                          {"data-upper", fixed(b.upper, 6)}};
    if (b.contains_zero) attrs.emplace_back("data-contains-zero", *b.contains_zero ? "true" : "false");
    attrs.emplace_back("stroke", b.colour);
    attrs.emplace_back("stroke-width", "3");
    attrs.emplace_back("stroke-linecap", "round");
    doc.line(x(b.lower), y, x(b.upper), y, attrs);
    doc.circle(x(b.mark), y, 5, {{"class", "estimate"}, {"fill", b.colour}});
  }
  doc.close_group();
}

}  // namespace

std::string interval_plot_svg(std::span<const MetricSection> sections) {
  if (sections.empty()) throw Error(ErrorCode::InvalidArgument, "no metrics to plot");
  svg::Document doc(kWidth, kHeight);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& s = sections[i];
    if (s.ordered.empty()) throw Error(ErrorCode::InvalidArgument, "empty interval list");
    std::vector<Bar> bars;
    for (const auto& oi : s.ordered) {
      bars.push_back({oi.team, oi.ci.lower, oi.ci.upper, oi.ci.point, kBlue, std::nullopt});
    }
    bar_panel(doc, s.metric, metric_title(s.metric), bars, panel_at(i, sections.size()), false);
  }
  return doc.str();
}

std::string difference_plot_svg(std::span<const MetricSection> sections) {
  if (sections.empty()) throw Error(ErrorCode::InvalidArgument, "no metrics to plot");
  svg::Document doc(kWidth, kHeight);
  for (std::size_t i = 0; i < sections.size(); ++i) {
    const auto& s = sections[i];
    if (s.differences.empty()) {
      throw Error(ErrorCode::TooFewTeams, "difference plot needs at least two teams");
    }
    std::vector<Bar> bars;
    for (const auto& d : s.differences) {
      bars.push_back({d.team_b, d.ci.lower, d.ci.upper, d.mean, d.contains_zero ? kRed : kGreen,
                      d.contains_zero});
    }
    const std::string title = std::string(metric_title(s.metric)) + " (best: " + s.best + ")";
    bar_panel(doc, s.metric, title, bars, panel_at(i, sections.size()), true);
  }
  return doc.str();
}

std::string histogram_svg(const PairHistogram& h) {
  const auto& hist = h.histogram;
  if (hist.counts.empty()) throw Error(ErrorCode::InvalidArgument, "empty histogram");
  svg::Document doc(kWidth, kHeight);
  const double lo_data = std::min({hist.edges.front(), 0.0, h.delta});
  const double hi_data = std::max({hist.edges.back(), 0.0, 2.0 * h.delta});
  const auto [d0, d1] = padded(lo_data, hi_data);
  const Panel p{100.0, kWidth - 60.0};
  const svg::Scale x{d0, d1, p.x0, p.x1};
  const std::size_t peak = *std::max_element(hist.counts.begin(), hist.counts.end());
  const svg::Scale y{0.0, static_cast<double>(peak), kBottom, kTop + 40};

  const std::string title = std::string(metric_title(h.metric)) + " differences: " + h.team_a +
                            " - " + h.team_b + " (p = " + format4(h.p.p) + ")";
  doc.text(kWidth / 2.0, 50, title,
           {{"font-size", "22"}, {"text-anchor", "middle"}, {"font-weight", "bold"}});
  axis(doc, x, p);
  doc.open_group({{"class", "bins"}, {"fill", "#9ecae1"}, {"stroke", "#3182bd"}});
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    double left = x(hist.edges[i]);
    double right = x(hist.edges[i + 1]);
    if (right - left < 2.0) {  // zero-range sample: draw a thin visible bar
      left -= 1.0;
      right += 1.0;
    }
    const double top = y(static_cast<double>(hist.counts[i]));
    doc.rect(left, top, right - left, kBottom - top,
             {{"class", "bin"}, {"data-count", std::to_string(hist.counts[i])}});
  }
  doc.close_group();

  struct Marker {
    const char* id;
    const char* label;
    double value;
    const char* colour;
  };
  const Marker markers[] = {{"zero", "0", 0.0, "#000000"},
                            {"delta", "δ", h.delta, kRed},
                            {"two-delta", "2δ", 2.0 * h.delta, kGreen}};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& m = markers[i];
    const double px = x(m.value);
    doc.line(px, kTop, px, kBottom,
             {{"class", "marker"},
              {"data-marker", m.id},
              {"data-value", fixed(m.value, 6)},
              {"stroke", m.colour},
              {"stroke-width", "2"},
              {"stroke-dasharray", "8 4"}});
    doc.text(px + 6, kTop + 20 + 22 * static_cast<double>(i), m.label,
             {{"font-size", "18"}, {"fill", m.colour}});
  }
  return doc.str();
}

void emit_interval_plot(std::span<const MetricSection> sections, const std::filesystem::path& dir) {
  write_text(dir / "fig1_intervals.svg", interval_plot_svg(sections));
}

void emit_difference_plot(std::span<const MetricSection> sections,
                          const std::filesystem::path& dir) {
  write_text(dir / "fig2_differences.svg", difference_plot_svg(sections));
}

std::string emit_histogram(const PairHistogram& h, const std::filesystem::path& dir) {
  const std::string name = histogram_file_name(h);
  write_text(dir / name, histogram_svg(h));
  return name;
}

void emit_all(const ComparisonReport& r, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoFailure, "cannot create '" + dir.string() + "': " + ec.message());
  emit_tables(r, dir);
  emit_interval_plot(r.sections, dir);
  const bool paired = !r.sections.empty() && !r.sections.front().differences.empty();
  if (paired) emit_difference_plot(r.sections, dir);
  for (const auto& h : r.histograms) emit_histogram(h, dir);
}

}  // namespace cjudge
