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

#include <vector>

#include "khwp/graph.hpp"

namespace khwp {

/// Connected set cover: choose members of `family` covering 0..universe-1
/// whose induced subgraph of `host` (a graph on family indices) is connected.
struct CscInstance {
  int universe = 0;
  std::vector<std::vector<Vertex>> family;
  std::vector<std::vector<int>> host;

  /// Throws InvalidInput on malformed host lists or out-of-range elements.
  void validate() const;
  bool is_cover(const std::vector<int>& chosen) const;
  bool is_connected_in_host(const std::vector<int>& chosen) const;
};

struct CoverResult {
  /// Family indices, in the order they were picked.
  std::vector<int> chosen;
};

}  // namespace khwp
