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

#include "khwp/generate.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "khwp/error.hpp"

namespace khwp {

Graph random_tree(int n, Rng& rng) {
  if (n < 1) fail(ErrorKind::InvalidInput, "tree needs n >= 1");
  if (n == 1) return Graph::from_edges(1, {});
  if (n == 2) {
    Edge e{0, 1};
    return Graph::from_edges(2, std::span<const Edge>(&e, 1));
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int c : code) {
    int leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, c});
    if (--degree[c] == 1) leaves.push(c);
  }
  int a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, double p, Rng& rng, int attempts) {
  if (n < 1 || p < 0 || p > 1) fail(ErrorKind::InvalidInput, "bad random graph parameters");
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < attempts; ++a) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.push_back({u, v});
      }
    }
    auto g = Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
  fail(ErrorKind::InvalidInput, "no connected G(" + std::to_string(n) + ", " +
                                    std::to_string(p) + ") after " +
                                    std::to_string(attempts) + " draws");
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) fail(ErrorKind::InvalidInput, "grid needs positive sides");
  std::vector<Edge> edges;
  auto id = [&](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorKind::InvalidInput, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Hypergraph random_hypergraph(int n, int m, int k, Rng& rng, int attempts) {
  if (k < 1 || k > n || m < 1) fail(ErrorKind::InvalidInput, "bad hypergraph parameters");
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int a = 0; a < attempts; ++a) {
    std::set<std::vector<Vertex>> edges;
    int guard = 0;
    while (static_cast<int>(edges.size()) < m && guard++ < 100 * m) {
      std::shuffle(pool.begin(), pool.end(), rng);
      std::vector<Vertex> e(pool.begin(), pool.begin() + k);
      std::sort(e.begin(), e.end());
      edges.insert(std::move(e));
    }
    if (static_cast<int>(edges.size()) < m) break;
    auto h = Hypergraph::from_hyperedges(n, k, {edges.begin(), edges.end()});
    if (h.is_connected()) return h;
  }
  fail(ErrorKind::InvalidInput, "no connected hypergraph with n=" + std::to_string(n) +
                                    " m=" + std::to_string(m) + " k=" + std::to_string(k));
}

}  // namespace khwp
