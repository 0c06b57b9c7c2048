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
#include <string_view>
#include <vector>

#include "khwp/caps.hpp"
#include "khwp/graph.hpp"
#include "khwp/patterns.hpp"

namespace khwp {

/// I: a whole 4-cycle. II: a 4-cycle with one vertex swapped for a dummy.
/// III: a whole 2x3 grid. IV: a grid with one vertex swapped for a dummy.
enum class SetKind { I, II, III, IV };

std::string_view to_string(SetKind kind);

struct PackingSet {
  SetKind kind;
  /// Sorted; dummies are negative and therefore come first.
  std::vector<Vertex> members;
  int weight = 0;
  /// Index into PackingInstance::cycles (I, II) or ::grids (III, IV).
  int origin = 0;
  /// For II and IV: the real vertex the dummy stands in for.
  std::optional<Vertex> replaced;
  std::optional<Vertex> dummy;
};

struct PackingInstance {
  int n = 0;
  std::vector<Cycle4> cycles;
  std::vector<GridPattern> grids;
  std::vector<PackingSet> sets;
  /// Most negative dummy id handed out so far (0 when none).
  Vertex last_dummy = 0;
};

struct PackingSolution {
  /// Indices into PackingInstance::sets, ascending.
  std::vector<int> chosen;
  int weight = 0;
};

enum class PackingMode { Greedy, LocalSearch, Exact };

PackingMode parse_packing_mode(std::string_view text);

/// Per cycle: one type I set and four type II sets. Per grid: one type III
/// set and six type IV sets. Dummy ids run -1, -2, ...
PackingInstance build_sp_instance(const Graph& g);

/// Throws InvariantViolation if two chosen sets share an element.
void check_disjoint(const PackingInstance& inst, const PackingSolution& sol);

PackingSolution approx_set_packing(const PackingInstance& inst, PackingMode mode,
                                   const Caps& caps = {});

/// Drops II/IV sets whose replaced vertices point at each other in a cycle
/// (each such set hangs off the chosen set holding its replaced vertex).
/// One set per cycle goes: lowest weight, then smallest index.
PackingSolution normalize_anchors(const PackingInstance& inst, PackingSolution sol);

/// Chosen set covering vertex v, or -1.
int owner_of(const PackingInstance& inst, const PackingSolution& sol, Vertex v);

}  // namespace khwp
