// Copyright 2026 The khwp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "khwp/caps.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include "khwp/error.hpp"

namespace khwp {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Caps Caps::parse(std::istream& in) {
  Caps caps;
  const std::map<std::string, int Caps::*> keys = {
      {"oracle_max_n", &Caps::oracle_max_n},
      {"oracle_max_k", &Caps::oracle_max_k},
      {"exact_packing_max_elements", &Caps::exact_packing_max_elements},
      {"exact_csc_max_family", &Caps::exact_csc_max_family},
      {"exact_matching_max_odd", &Caps::exact_matching_max_odd},
      {"csc_graph_max_k", &Caps::csc_graph_max_k},
  };

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorKind::InvalidInput,
           "caps line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto it = keys.find(key);
    if (it == keys.end()) {
      fail(ErrorKind::InvalidInput, "caps line " + std::to_string(lineno) +
                                        ": unknown key '" + key + "'");
    }
    int parsed = 0;
    auto [ptr, ec] =
        std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size() || parsed < 0) {
      fail(ErrorKind::InvalidInput, "caps line " + std::to_string(lineno) +
                                        ": bad value '" + value + "'");
    }
    caps.*(it->second) = parsed;
  }
  return caps;
}

Caps Caps::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open caps file " + path);
  return parse(in);
}

}  // namespace khwp
