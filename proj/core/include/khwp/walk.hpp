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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "khwp/graph.hpp"

namespace khwp {

/// Slot i holds the vertex of agent i.
using Configuration = std::vector<Vertex>;

struct TransitionWalk {
  int k = 0;
  std::vector<Configuration> configs;

  /// Number of transitions; -1 for an empty walk.
  int length() const { return static_cast<int>(configs.size()) - 1; }
};

enum class ViolationKind {
  EmptyWalk,
  WrongArity,
  OutOfRange,
  RepeatedVertex,
  Disconnected,
  NotAdjacent,
};

struct Violation {
  ViolationKind kind;
  /// Index of the offending configuration (for NotAdjacent, the later one).
  int step = 0;
  std::vector<Vertex> witness;
  std::string message;
};

std::optional<Violation> validate_configuration(const Graph& g,
                                                std::span<const Vertex> c);

/// r = number of vertices of c2 not in c, or nullopt when some slot neither
/// stays nor moves along an edge. Throws InvalidInput on mismatched k.
std::optional<int> classify_transition(const Graph& g, std::span<const Vertex> c,
                                       std::span<const Vertex> c2);

struct WalkReport {
  int length = -1;
  bool spanning = false;
  /// histogram[r] counts r-transitions.
  std::vector<int> histogram;
  std::optional<Violation> violation;

  bool valid() const { return !violation.has_value(); }
  bool ok() const { return valid() && spanning; }
};

WalkReport validate_walk(const Graph& g, const TransitionWalk& w);

/// Orders the vertex set `to` so that slot i of `from` stays or moves along an
/// edge to slot i of the result. nullopt when no such ordering exists.
std::optional<Configuration> align_slots(const Graph& g, std::span<const Vertex> from,
                                         std::span<const Vertex> to);

/// Removes configurations whose vertex set equals their predecessor's and
/// re-aligns the rest so every transition stays valid.
TransitionWalk drop_zero_transitions(const Graph& g, const TransitionWalk& w);

/// Single-agent walk visiting every vertex of every configuration of w2,
/// at most 2*len(w2)+1 steps long.
std::vector<Vertex> two_to_one(const Graph& g, const TransitionWalk& w2);

/// ((v1,v2),(v2,v3),...,(vl,vl+1)). Consecutive repeats in w1 are dropped
/// first; throws InvalidInput if fewer than two vertices remain.
TransitionWalk one_to_two(const Graph& g, std::span<const Vertex> w1);

/// Wraps a vertex sequence as a 1-agent walk.
TransitionWalk as_walk(std::span<const Vertex> w1);

/// 1 iff e lies off `path` and the side of e away from the path holds a vertex
/// at distance >= k from e's endpoint nearer the path.
int d_P_k(const Graph& tree, std::span<const Vertex> path, int k, Edge e);

/// (n-k) + sum of d_P_k over all edges, with P a longest path of the tree.
int rhwp_lower_bound(const Graph& tree, int k);

/// Serialized form:
///
///     k 2 length 2 spanning 1
///     0: 0 1
///     1: 1 2
///     2: 2 3
void write_walk(std::ostream& out, const Graph& g, const TransitionWalk& w);
TransitionWalk read_walk(std::string_view text);
TransitionWalk read_walk_file(const std::string& path);

}  // namespace khwp
