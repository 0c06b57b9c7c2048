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

#include <array>
#include <vector>

#include "khwp/graph.hpp"

namespace khwp {

/// 4-cycle v0-v1-v2-v3-v0 in canonical form: v0 is the smallest vertex and
/// v1 < v3.
using Cycle4 = std::array<Vertex, 4>;

/// 2x3 grid, laid out as
///
///     v0 - v1
///     |    |
///     v3 - v2
///     |    |
///     v4 - v5
///
/// i.e. the seven edges (v0,v1) (v2,v3) (v4,v5) (v0,v3) (v1,v2) (v3,v4)
/// (v2,v5). Canonical form is the lexicographically smallest of the four
/// relabelings under horizontal and vertical flips.
struct GridPattern {
  std::array<Vertex, 6> v;

  static constexpr std::array<std::array<int, 2>, 7> kEdges = {{
      {0, 1}, {2, 3}, {4, 5}, {0, 3}, {1, 2}, {3, 4}, {2, 5}}};

  /// The four automorphic relabelings, identity first.
  std::array<std::array<Vertex, 6>, 4> relabelings() const;
  GridPattern canonical() const;
  bool embeds_in(const Graph& g) const;

  friend bool operator==(const GridPattern&, const GridPattern&) = default;
  friend auto operator<=>(const GridPattern&, const GridPattern&) = default;
};

std::vector<Cycle4> enumerate_c4(const Graph& g);
std::vector<GridPattern> enumerate_grid_2x3(const Graph& g);

/// All k-vertex sets inducing a connected subgraph, each sorted, listed in
/// lexicographic order.
std::vector<std::vector<Vertex>> enumerate_connected_ksubsets(const Graph& g,
                                                              int k);

/// True when the subgraph induced by `vertices` is connected (and nonempty).
bool induces_connected(const Graph& g, std::span<const Vertex> vertices);

}  // namespace khwp
