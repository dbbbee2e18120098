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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace cli_runner {

struct Result {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

inline std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

/// Runs the CLI binary with the given shell-ready argument string.
inline Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + quote(CJ_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// True when both directories hold the same file names with identical bytes.
inline bool same_tree(const std::filesystem::path& a, const std::filesystem::path& b,
                      std::string* first_difference = nullptr) {
  namespace fs = std::filesystem;
  std::size_t count_a = 0, count_b = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    ++count_a;
    const auto other = b / e.path().filename();
    if (!fs::exists(other) || slurp(e.path()) != slurp(other)) {
      if (first_difference) *first_difference = e.path().filename().string();
      return false;
    }
  }
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(b)) ++count_b;
  if (count_a != count_b && first_difference) *first_difference = "file count";
  return count_a == count_b;
}

}  // namespace cli_runner
