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

#include <utility>
#include <vector>

#include "khwp/graph.hpp"
#include "khwp/packing.hpp"

namespace khwp {

/// A node of the spanning tree over configurations. A contracted node stands
/// for the edge (a, b) of G. A plain node stands for vertex a; b is the
/// vertex it was attached through, so {a, b} is still an edge of G and the
/// node can be occupied by two agents.
struct TrNode {
  bool contracted = true;
  Vertex a = 0;
  Vertex b = 0;
  /// Packing set the node came from, or -1.
  int set = -1;
  /// The lone contracted node planted when the packing is empty.
  bool seed = false;

  bool holds(Vertex v) const { return a == v || b == v; }
};

struct ContractedTree {
  std::vector<TrNode> nodes;
  /// Multigraph edges over node indices; parallel edges only after modify_tr.
  std::vector<std::pair<int, int>> edges;
  /// Edge count straight after construction.
  int built_edges = 0;
  /// Parallel edges added by modify_tr.
  int parallel_edges = 0;
  /// For each chosen type I/II set, its two gadget node indices.
  std::vector<std::pair<int, int>> short_gadgets;

  std::vector<int> degrees() const;
  /// Odd-degree contracted nodes, not counting the seed.
  int n_odd_c() const;
  /// Acyclic and connected when parallel edges are ignored.
  bool is_tree_ignoring_parallel() const;
};

struct TypeCounts {
  int i = 0, ii = 0, iii = 0, iv = 0;
  int weight() const { return 4 * i + 3 * ii + 6 * iii + 5 * iv; }
};

TypeCounts count_types(const PackingInstance& inst, const PackingSolution& sol);

/// Edge count predicted for the construction: one edge per type I set, two per
/// type II and III, three per type IV, one per vertex left over, and two for
/// every extra component merged.
long long predicted_edge_count(int n, const TypeCounts& counts);

/// Gadgets for each chosen set, links from reduced sets to the set holding
/// their replaced vertex, then leftover vertices one at a time, then one
/// contracted node per merge of two components.
ContractedTree build_tr_graph(const Graph& g, const PackingInstance& inst,
                              const PackingSolution& sol);

/// Doubles the edge of every type I/II gadget whose two nodes both have odd
/// degree.
ContractedTree modify_tr(ContractedTree tr);

}  // namespace khwp
