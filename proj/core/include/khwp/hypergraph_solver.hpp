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

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "khwp/caps.hpp"
#include "khwp/graph.hpp"
#include "khwp/set_cover.hpp"
#include "khwp/walk.hpp"

namespace khwp {

/// Line graph of a hypergraph plus jump edges. Nodes are hyperedge ids.
struct AugmentedLineGraph {
  enum class Label { Shift, Jump };

  int m = 0;
  /// Pairs (e, f) with e < f, sorted.
  std::vector<std::pair<int, int>> shift_edges;
  std::vector<std::pair<int, int>> jump_edges;
  /// Sorted adjacency over both edge kinds.
  std::vector<std::vector<int>> adj;

  bool adjacent(int e, int f) const;
  std::optional<Label> label(int e, int f) const;
};

/// Agents on e can each step to a distinct vertex of f that shares a
/// hyperedge with them (no agent stays put).
bool jump_possible(const Hypergraph& h, int e, int f);

/// Shift when the hyperedges meet, otherwise jump when jump_possible holds.
/// Throws InvalidInput when some vertex is uncovered or L(G) is disconnected.
AugmentedLineGraph build_lstar(const Hypergraph& h);

CscInstance csc_instance(const Hypergraph& h, const AugmentedLineGraph& lstar);

/// Seeds with the largest set, then repeatedly adds the host-adjacent set
/// covering the most new elements. When no adjacent set helps, splices in the
/// shortest host path to the best remaining set.
CoverResult greedy_connected_set_cover(const CscInstance& inst);

/// Shortest walk through every member of a host-connected cover: a spanning
/// tree of the cover, walked with every edge doubled, cut after the last
/// first visit. Entries are family indices.
std::vector<int> walk_through_cover(const std::vector<std::vector<int>>& host,
                                    const std::vector<int>& cover);

struct HyperWalk {
  std::vector<int> hyperedges;
  int length() const { return static_cast<int>(hyperedges.size()) - 1; }
};

struct HyperSolve {
  AugmentedLineGraph lstar;
  CoverResult cover;
  HyperWalk walk;
};

HyperSolve solve_khwp_hypergraph(const Hypergraph& h);

struct HyperWalkReport {
  int length = -1;
  bool covering = false;
  /// First index whose step is not an edge of L*(G), or -1.
  int bad_step = -1;
  bool ok() const { return covering && bad_step < 0 && length >= 0; }
};

HyperWalkReport validate_hyper_walk(const Hypergraph& h, const AugmentedLineGraph& lstar,
                                    const HyperWalk& walk);

/// Header `k <k> length <l> spanning <0|1>`, then `t: e<id>` lines.
void write_hyper_walk(std::ostream& out, const Hypergraph& h,
                      const AugmentedLineGraph& lstar, const HyperWalk& walk);

/// Cover the graph with connected k-sets, hosts joined when agents can move
/// between them in one step, then expand the cover walk into configurations.
TransitionWalk solve_khwp_graph_csc(const Graph& g, int k, const Caps& caps = {});

}  // namespace khwp
