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
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

namespace khwp {

/// Vertices are dense ids 0..n-1. Negative ids are reserved for the dummy
/// elements of packing instances and never name a graph vertex.
using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph, immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInput on out-of-range ids, self-loops or duplicate edges.
  /// Connectivity is not required here; load_graph() enforces it.
  static Graph from_edges(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  /// Sorted neighbor list.
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  bool is_connected() const;
  bool is_tree() const { return n() >= 1 && m() == n() - 1 && is_connected(); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// k-uniform hypergraph without repeated hyperedges.
class Hypergraph {
 public:
  Hypergraph() = default;

  static Hypergraph from_hyperedges(int n, int k,
                                    std::vector<std::vector<Vertex>> hyperedges);

  int n() const { return static_cast<int>(incident_.size()); }
  int m() const { return static_cast<int>(hyperedges_.size()); }
  int k() const { return k_; }

  /// Sorted vertex list of hyperedge e.
  std::span<const Vertex> hyperedge(int e) const { return hyperedges_[e]; }
  /// Ids of hyperedges containing v, ascending.
  std::span<const int> incident(Vertex v) const { return incident_[v]; }

  bool intersects(int e, int f) const;
  /// Open neighbourhood: vertices sharing some hyperedge with v.
  std::vector<Vertex> neighborhood(Vertex v) const;
  /// Id of the hyperedge with exactly these vertices, or -1.
  int find(std::span<const Vertex> sorted_vertices) const;

  /// Every vertex lies in a hyperedge and the line graph is connected.
  bool is_connected() const;

 private:
  int k_ = 0;
  std::vector<std::vector<Vertex>> hyperedges_;
  std::vector<std::vector<int>> incident_;
};

/// Edge-list text: `n m`, then m lines `u v`. Lines starting with `#` and
/// blank lines are skipped. Rejects disconnected graphs.
Graph load_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Hypergraph text: `n m k`, then m lines of k vertex ids.
Hypergraph load_hypergraph(std::string_view text);
Hypergraph load_hypergraph_file(const std::string& path);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

/// Hop distances from a source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Multi-source hop distances; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources);

/// Row-major all-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> values)
      : n_(n), values_(std::move(values)) {}

  int n() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return values_[u * n_ + v]; }
  std::span<const int> values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<int> values_;
};

DistanceMatrix shortest_path_matrix(const Graph& g);

/// Vertex sequence of a shortest path from `from` to `to` (both included).
std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

struct TreeDiameter {
  int length = 0;
  /// Endpoint-to-endpoint vertex sequence of one longest path.
  std::vector<Vertex> path;
};

/// Double-BFS from vertex 0. Farthest-vertex ties go to the smallest id.
/// Throws InvalidInput when g is not a tree.
TreeDiameter tree_diameter(const Graph& g);

}  // namespace khwp
