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
#include "khwp/walk.hpp"

namespace khwp {

/// Depth-first walk from one end of a longest path to the other, taking
/// unexplored off-path neighbours first (smallest id) and backtracking to the
/// parent when stuck. Length is 2(n-1) - diam.
std::vector<Vertex> one_hwp_tree(const Graph& tree);

/// One step of k_rhwp_tree, recorded after the move.
struct RhwpStep {
  Vertex head;
  Vertex tail;
  /// Head and tail as chosen before the move (after any transfers).
  Vertex mover;
  Vertex anchor;
};

/// Head/tail walk with one new vertex per step. The first configuration holds
/// the first k vertices the single-agent walk explores. k = 1 wraps
/// one_hwp_tree.
TransitionWalk k_rhwp_tree(const Graph& tree, int k,
                           std::vector<RhwpStep>* trace = nullptr);

}  // namespace khwp
