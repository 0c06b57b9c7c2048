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

#include "khwp/caps.hpp"
#include "khwp/graph.hpp"

namespace khwp {

/// Points 0..size-1 with a symmetric distance table.
class MetricInstance {
 public:
  MetricInstance() = default;
  MetricInstance(int size, std::vector<long long> dist);

  /// Hop-distance closure of a connected graph.
  static MetricInstance closure_of(const Graph& g);

  int size() const { return size_; }
  long long operator()(int a, int b) const {
    return dist_[static_cast<std::size_t>(a) * size_ + b];
  }

  /// Throws InvalidInput unless symmetric, zero on the diagonal, non-negative
  /// and satisfying the triangle inequality.
  void validate() const;

 private:
  int size_ = 0;
  std::vector<long long> dist_;
};

using WeightedEdge = std::pair<int, int>;

struct SpanningTree {
  std::vector<WeightedEdge> edges;
  long long cost = 0;
};

/// Prim's algorithm on the dense table.
SpanningTree mst(const MetricInstance& inst);

struct Matching {
  std::vector<WeightedEdge> pairs;
  /// The two odd points left for the path ends; (-1, -1) when none.
  std::pair<int, int> unmatched{-1, -1};
  long long cost = 0;
  /// Greedy fallback was used (too many points for the exact search).
  bool heuristic = false;
};

/// Minimum-cost perfect matching on all of `odd` but two points, with the
/// excluded pair chosen jointly.
Matching min_matching_except_two(const MetricInstance& inst, const std::vector<int>& odd,
                                 const Caps& caps = {});

/// Traverses every edge of a connected multigraph once. Starts at the smaller
/// odd-degree point when there are two. Returns the point sequence.
std::vector<int> euler_path(int points, const std::vector<WeightedEdge>& multigraph);

struct HamiltonianPath {
  std::vector<int> order;
  long long cost = 0;
  /// Cost of the Euler traversal before shortcutting.
  long long euler_cost = 0;
  long long matching_cost = 0;
  bool heuristic = false;
};

/// Spanning multigraph `base` (connected over all points) plus a matching of
/// its odd points except two, Euler path, shortcut in traversal order.
HamiltonianPath christofides_path(const MetricInstance& inst,
                                  const std::vector<WeightedEdge>& base,
                                  const Caps& caps = {});

/// christofides_path on the minimum spanning tree.
HamiltonianPath metric_hamiltonian_path(const MetricInstance& inst, const Caps& caps = {});

long long path_cost(const MetricInstance& inst, const std::vector<int>& order);

}  // namespace khwp
