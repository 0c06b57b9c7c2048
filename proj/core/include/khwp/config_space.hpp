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

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "khwp/graph.hpp"

namespace khwp {

/// Connected k-vertex sets of a graph, joined when some assignment of agents
/// lets each one stay put or cross one edge to reach the other set. Agent
/// order is dropped: two orderings of one set reach the same successors.
class ConfigurationSpace {
 public:
  ConfigurationSpace(const Graph& g, int k);

  int k() const { return k_; }
  int size() const { return static_cast<int>(sets_.size()); }

  /// Sorted vertex set of configuration id.
  std::span<const Vertex> set(int id) const { return sets_[id]; }
  /// Requires n <= 64.
  std::uint64_t mask(int id) const { return masks_[id]; }
  /// Neighbouring set ids, ascending. Never contains id itself.
  std::span<const int> neighbors(int id) const { return adj_[id]; }
  /// Number of vertices of `to` outside `from` (r of the transition).
  int new_vertices(int from, int to) const;

  /// Id of a sorted vertex set, or -1.
  int find(std::span<const Vertex> sorted) const;

 private:
  struct Hash {
    std::size_t operator()(const std::vector<Vertex>& v) const noexcept;
  };

  int k_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::vector<Vertex>, int, Hash> index_;
};

}  // namespace khwp
