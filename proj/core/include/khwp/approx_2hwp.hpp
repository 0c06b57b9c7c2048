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

#include <optional>
#include <vector>

#include "khwp/caps.hpp"
#include "khwp/contracted_tree.hpp"
#include "khwp/graph.hpp"
#include "khwp/metric_path.hpp"
#include "khwp/packing.hpp"
#include "khwp/walk.hpp"

namespace khwp {

/// Hamiltonian path on the hop metric, unfolded into a vertex walk, paired up
/// into consecutive edges.
TransitionWalk simple_3approx(const Graph& g, const Caps& caps = {});

struct Alg2Diagnostics {
  int c4_count = 0;
  int grid_count = 0;
  int packing_weight = 0;
  TypeCounts types;
  /// Reduced sets removed because their replaced vertices formed a loop.
  int dropped_sets = 0;
  int tr_nodes = 0;
  int len_tr = 0;
  long long predicted_edges = 0;
  int parallel_edges = 0;
  long long matching_cost = 0;
  long long euler_cost = 0;
  long long path_cost = 0;
  bool matching_heuristic = false;
  int n_odd_c = 0;
  /// #I + #II + 2#III + 3#IV.
  int odd_bound = 0;
  bool odd_bound_holds = true;
  int walk_length = 0;
};

struct Alg2Result {
  TransitionWalk walk;
  PackingInstance instance;
  PackingSolution packing;
  ContractedTree tree;
  Alg2Diagnostics diagnostics;
};

/// Packing, spanning tree of configurations, Christofides path over the
/// configuration-graph distances between tree nodes, then every hop of that
/// path replaced by a shortest run of configurations.
Alg2Result alg2(const Graph& g, PackingMode mode, const Caps& caps = {});

struct SpBoundReport {
  int n = 0;
  int packing_optimum = 0;
  /// n - w/2 - 1.
  double bound = 0;
  int h2 = 0;
  bool holds = false;
  double slack = 0;
};

/// Compares h_2 against the packing-based lower bound with exact oracles on
/// both sides.
SpBoundReport sp_lower_bound_check(const Graph& g, const Caps& caps = {});

}  // namespace khwp
