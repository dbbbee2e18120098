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
#include "svg.hpp"

#include <cmath>
#include <cstdio>

namespace cjudge::svg {

std::string escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::element(std::string_view tag, const Attributes& geometry, const Attributes& attrs) {
  body_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  body_ += '<';
  body_ += tag;
  for (const auto& list : {&geometry, &attrs}) {
    for (const auto& [k, v] : *list) {
      body_ += ' ' + k + "=\"" + escape(v) + '"';
    }
  }
}

void Document::open_group(const Attributes& attrs) {
  element("g", {}, attrs);
  body_ += ">\n";
  ++depth_;
}

void Document::close_group() {
  --depth_;
  body_.append(static_cast<std::size_t>(depth_) * 2, ' ');
  body_ += "</g>\n";
}

void Document::line(double x1, double y1, double x2, double y2, const Attributes& attrs) {
  element("line", {{"x1", coord(x1)}, {"y1", coord(y1)}, {"x2", coord(x2)}, {"y2", coord(y2)}},
          attrs);
  body_ += "/>\n";
}

void Document::rect(double x, double y, double w, double h, const Attributes& attrs) {
  element("rect",
          {{"x", coord(x)}, {"y", coord(y)}, {"width", coord(w)}, {"height", coord(h)}}, attrs);
  body_ += "/>\n";
}

void Document::circle(double cx, double cy, double r, const Attributes& attrs) {
  element("circle", {{"cx", coord(cx)}, {"cy", coord(cy)}, {"r", coord(r)}}, attrs);
  body_ += "/>\n";
}

void Document::text(double x, double y, std::string_view content, const Attributes& attrs) {
  element("text", {{"x", coord(x)}, {"y", coord(y)}}, attrs);
  body_ += '>';
  body_ += escape(content);
  body_ += "</text>\n";
}

std::string Document::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + coord(width_) + ' ' +
         coord(height_) + "\" width=\"" + coord(width_) + "\" height=\"" + coord(height_) +
         "\" font-family=\"sans-serif\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

std::vector<double> ticks(double lo, double hi, int n) {
  std::vector<double> out;
  if (!(hi > lo) || n < 1) {
    out.push_back(lo);
    return out;
  }
  const double raw = (hi - lo) / n;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (step >= raw) break;
  }
  for (auto i = static_cast<long long>(std::ceil(lo / step - 1e-9));; ++i) {
    const double v = static_cast<double>(i) * step;
    if (v > hi + step * 1e-9) break;
    out.push_back(v);
  }
  return out;
}

}  // namespace cjudge::svg
