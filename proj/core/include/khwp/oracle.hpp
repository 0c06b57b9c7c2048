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

#include "khwp/caps.hpp"
#include "khwp/graph.hpp"
#include "khwp/packing.hpp"
#include "khwp/set_cover.hpp"
#include "khwp/walk.hpp"

namespace khwp {

struct AugmentedLineGraph;

struct OracleResult {
  int length = 0;
  TransitionWalk witness;
};

/// Breadth-first search over (configuration set, covered vertices) from every
/// starting configuration at once. With `restricted`, only transitions that
/// bring in exactly one new vertex are used.
OracleResult exact_hk(const Graph& g, int k, bool restricted = false,
                      const Caps& caps = {});

/// Maximum-weight disjoint subfamily. The cap applies to the number of
/// elements shared by two or more sets.
PackingSolution exact_set_packing(const PackingInstance& inst, const Caps& caps = {});

/// Minimum-cardinality connected cover, by increasing subset size.
CoverResult exact_connected_set_cover(const CscInstance& inst, const Caps& caps = {});

struct HyperWalkResult {
  int length = 0;
  std::vector<int> hyperedges;
};

/// Shortest sequence of hyperedges, consecutive ones adjacent in `lstar`,
/// whose union is every vertex.
HyperWalkResult exact_hyperedge_walk(const Hypergraph& h, const AugmentedLineGraph& lstar,
                                     const Caps& caps = {});

}  // namespace khwp
