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

#pragma once

#include <istream>
#include <string>

namespace khwp {

/// Size limits for the exhaustive routines. Exceeding one is reported as
/// ErrorKind::CapExceeded; nothing is silently truncated.
///
/// Text form is one `key = value` per line, `#` starts a comment:
///
///     oracle_max_n = 12
///     oracle_max_k = 4
///     exact_packing_max_elements = 24
///     exact_csc_max_family = 20
///     exact_matching_max_odd = 18
///     csc_graph_max_k = 4
struct Caps {
  int oracle_max_n = 12;
  int oracle_max_k = 4;
  /// Number of universe elements shared by two or more packing sets.
  int exact_packing_max_elements = 24;
  int exact_csc_max_family = 20;
  /// Above this many odd vertices the matching falls back to greedy and
  /// flags the result as heuristic.
  int exact_matching_max_odd = 18;
  int csc_graph_max_k = 4;

  static Caps parse(std::istream& in);
  static Caps load(const std::string& path);
};

}  // namespace khwp
