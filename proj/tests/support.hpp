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

// Brute-force references used by the unit and acceptance tests. Everything
// here is written from definitions alone and shares no code with the
// library's solvers beyond the Graph container.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "khwp/graph.hpp"
#include "khwp/metric_path.hpp"
#include "khwp/packing.hpp"

#ifndef KHWP_FIXTURE_DIR
#define KHWP_FIXTURE_DIR "data/fixtures"
#endif

namespace khwp::testing {

inline std::string fixture(const std::string& name) {
  return std::string(KHWP_FIXTURE_DIR) + "/" + name;
}

inline Graph make_graph(int n, std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Connectivity of the subgraph induced by `vs` by plain flood fill.
inline bool bf_connected(const Graph& g, const std::vector<int>& vs) {
  if (vs.empty()) return false;
  std::set<int> want(vs.begin(), vs.end()), seen{vs[0]};
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : want) {
      if (!seen.count(y) && g.has_edge(x, y)) {
        seen.insert(y);
        stack.push_back(y);
      }
    }
  }
  return seen.size() == want.size();
}

/// Floyd-Warshall hop distances.
inline std::vector<std::vector<int>> bf_distances(const Graph& g) {
  const int n = g.n();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline int bf_tree_diameter(const Graph& g) {
  int best = 0;
  for (const auto& row : bf_distances(g)) best = std::max(best, *std::max_element(row.begin(), row.end()));
  return best;
}

/// Distinct 4-cycles, each ordered 4-tuple reduced to the smallest of its
/// eight rotations and reflections.
inline std::size_t bf_count_c4(const Graph& g) {
  const int n = g.n();
  std::set<std::array<int, 4>> seen;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          std::array<int, 4> t{a, b, c, d};
          std::set<int> distinct(t.begin(), t.end());
          if (distinct.size() != 4) continue;
          if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(c, d) || !g.has_edge(d, a)) continue;
          std::array<int, 4> best = t;
          for (int r = 0; r < 4; ++r) {
            std::array<int, 4> rot{t[r], t[(r + 1) % 4], t[(r + 2) % 4], t[(r + 3) % 4]};
            std::array<int, 4> ref{t[r], t[(r + 3) % 4], t[(r + 2) % 4], t[(r + 1) % 4]};
            best = std::min({best, rot, ref});
          }
          seen.insert(best);
        }
  return seen.size();
}

/// Distinct 2x3 grids over every ordered 6-tuple.
inline std::size_t bf_count_grids(const Graph& g) {
  const int n = g.n();
  static constexpr int kPattern[7][2] = {{0, 1}, {2, 3}, {4, 5}, {0, 3}, {1, 2}, {3, 4}, {2, 5}};
  std::set<std::array<int, 6>> seen;
  std::array<int, 6> t{};
  std::function<void(int)> rec = [&](int i) {
    if (i == 6) {
      for (auto& e : kPattern)
        if (!g.has_edge(t[e[0]], t[e[1]])) return;
      std::array<std::array<int, 6>, 4> all = {{
          {t[0], t[1], t[2], t[3], t[4], t[5]},
          {t[1], t[0], t[3], t[2], t[5], t[4]},
          {t[4], t[5], t[2], t[3], t[0], t[1]},
          {t[5], t[4], t[3], t[2], t[1], t[0]},
      }};
      seen.insert(*std::min_element(all.begin(), all.end()));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (std::find(t.begin(), t.begin() + i, v) != t.begin() + i) continue;
      t[i] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return seen.size();
}

inline std::vector<std::vector<int>> bf_connected_subsets(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  const int n = g.n();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) vs.push_back(v);
    if (bf_connected(g, vs)) out.push_back(vs);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Shortest spanning walk length for k agents, searched over ordered agent
/// tuples with per-agent moves. No symmetry reduction.
inline int bf_hk(const Graph& g, int k) {
  const int n = g.n();
  const std::uint32_t full = (1u << n) - 1;
  using State = std::pair<std::vector<int>, std::uint32_t>;
  std::map<State, int> dist;
  std::queue<State> q;
  std::vector<int> tuple(k);
  std::function<void(int)> seed = [&](int i) {
    if (i == k) {
      std::set<int> s(tuple.begin(), tuple.end());
      if (static_cast<int>(s.size()) != k || !bf_connected(g, tuple)) return;
      std::uint32_t cov = 0;
      for (int v : tuple) cov |= 1u << v;
      State st{tuple, cov};
      if (dist.emplace(st, 0).second) q.push(st);
      return;
    }
    for (int v = 0; v < n; ++v) {
      tuple[i] = v;
      seed(i + 1);
    }
  };
  seed(0);
  while (!q.empty()) {
    auto st = q.front();
    q.pop();
    int d = dist[st];
    if (st.second == full) return d;
    std::vector<int> next(k);
    std::function<void(int)> expand = [&](int i) {
      if (i == k) {
        std::set<int> s(next.begin(), next.end());
        if (static_cast<int>(s.size()) != k || !bf_connected(g, next)) return;
        std::uint32_t cov = st.second;
        for (int v : next) cov |= 1u << v;
        State ns{next, cov};
        if (dist.emplace(ns, d + 1).second) q.push(ns);
        return;
      }
      int here = st.first[i];
      next[i] = here;
      expand(i + 1);
      for (int w : g.neighbors(here)) {
        next[i] = w;
        expand(i + 1);
      }
    };
    expand(0);
  }
  return -1;
}

/// Cheapest Hamiltonian path by trying every permutation.
inline long long bf_hamiltonian_path(const MetricInstance& m) {
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  long long best = std::numeric_limits<long long>::max();
  do {
    if (perm.size() > 1 && perm.front() > perm.back()) continue;
    long long c = 0;
    for (std::size_t i = 1; i < perm.size(); ++i) c += m(perm[i - 1], perm[i]);
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Cheapest perfect matching of all but two of `pts`, by recursion over all
/// pairings and exclusions.
inline long long bf_matching_except_two(const MetricInstance& m, std::vector<int> pts) {
  std::function<long long(std::vector<int>, int)> rec = [&](std::vector<int> rest, int skips) {
    if (rest.empty()) return skips == 0 ? 0LL : std::numeric_limits<long long>::max() / 4;
    long long best = std::numeric_limits<long long>::max() / 4;
    int a = rest[0];
    std::vector<int> tail(rest.begin() + 1, rest.end());
    if (skips > 0) best = std::min(best, rec(tail, skips - 1));
    for (std::size_t j = 0; j < tail.size(); ++j) {
      auto r2 = tail;
      r2.erase(r2.begin() + j);
      best = std::min(best, m(a, tail[j]) + rec(r2, skips));
    }
    return best;
  };
  if (pts.empty()) return 0;
  return rec(pts, 2);
}

/// Maximum-weight disjoint subfamily by branching on each set.
inline int bf_set_packing(const PackingInstance& inst) {
  const int s = static_cast<int>(inst.sets.size());
  std::set<Vertex> used;
  std::function<int(int)> rec = [&](int i) -> int {
    if (i == s) return 0;
    int best = rec(i + 1);
    const auto& set = inst.sets[i];
    bool ok = std::none_of(set.members.begin(), set.members.end(), [&](Vertex v) { return used.count(v); });
    if (ok) {
      for (Vertex v : set.members) used.insert(v);
      best = std::max(best, set.weight + rec(i + 1));
      for (Vertex v : set.members) used.erase(v);
    }
    return best;
  };
  return rec(0);
}

/// All non-isomorphic trees on n vertices: grow every tree on n-1 vertices by
/// one leaf and keep one per centre-rooted canonical string.
inline std::string tree_code(const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> kids;
  for (int c : adj[root])
    if (c != parent) kids.push_back(tree_code(adj, c, root));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

inline std::string tree_canonical(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    std::vector<int> next;
    left -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::string best;
  for (int c : layer) {
    auto code = tree_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

inline std::vector<Graph> all_trees(int n) {
  std::vector<std::vector<std::vector<int>>> level = {{{}}};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, std::vector<std::vector<int>>> next;
    for (const auto& adj : level) {
      for (int v = 0; v < size - 1; ++v) {
        auto grown = adj;
        grown.push_back({v});
        grown[v].push_back(size - 1);
        next.emplace(tree_canonical(grown), grown);
      }
    }
    level.clear();
    for (auto& [code, adj] : next) level.push_back(adj);
  }
  std::vector<Graph> out;
  for (const auto& adj : level) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
      for (int w : adj[v])
        if (v < w) edges.push_back({v, w});
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

/// Every connected labelled graph on n vertices.
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second});
    auto g = Graph::from_edges(n, edges);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace khwp::testing
