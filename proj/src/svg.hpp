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
#include <string_view>
#include <utility>
#include <vector>

namespace cjudge::svg {

std::string escape(std::string_view text);
/// Fixed two-decimal coordinate formatting.
std::string coord(double v);

using Attributes = std::vector<std::pair<std::string, std::string>>;

/// Minimal append-only SVG document builder. Output depends only on the
/// sequence of calls.
class Document {
 public:
  Document(double width, double height);

  void open_group(const Attributes& attrs = {});
  void close_group();
  void line(double x1, double y1, double x2, double y2, const Attributes& attrs = {});
  void rect(double x, double y, double w, double h, const Attributes& attrs = {});
  void circle(double cx, double cy, double r, const Attributes& attrs = {});
  void text(double x, double y, std::string_view content, const Attributes& attrs = {});

  std::string str() const;

 private:
  void element(std::string_view tag, const Attributes& geometry, const Attributes& attrs);

  double width_;
  double height_;
  std::string body_;
  int depth_ = 1;
};

/// Linear map from a data interval onto a pixel interval.
struct Scale {
  double d0, d1, p0, p1;
  double operator()(double v) const {
    return d1 == d0 ? (p0 + p1) / 2.0 : p0 + (v - d0) * (p1 - p0) / (d1 - d0);
  }
};

/// Roughly n evenly spaced tick values with a 1/2/5 step inside [lo, hi].
std::vector<double> ticks(double lo, double hi, int n);

}  // namespace cjudge::svg
