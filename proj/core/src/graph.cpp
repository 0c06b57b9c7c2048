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

#include "khwp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "khwp/error.hpp"

namespace khwp {

namespace {

/// Splits a document into whitespace-separated integer rows, skipping blank
/// lines and `#` comments.
std::vector<std::vector<long long>> integer_rows(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::vector<long long> row;
    std::string tok;
    while (ls >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        fail(ErrorKind::InvalidInput,
             "line " + std::to_string(lineno) + ": not an integer: " + tok);
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_vertex(long long v, int n) {
  if (v < 0 || v >= n) {
    fail(ErrorKind::InvalidInput,
         "vertex " + std::to_string(v) + " out of range 0.." +
             std::to_string(n - 1));
  }
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) fail(ErrorKind::InvalidInput, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    if (u == v) {
      fail(ErrorKind::InvalidInput, "self-loop at " + std::to_string(u));
    }
    g.edges_.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    fail(ErrorKind::InvalidInput, "duplicate edge " + std::to_string(dup->u) +
                                      " " + std::to_string(dup->v));
  }
  for (auto [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const {
  if (n() == 0) return false;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Hypergraph Hypergraph::from_hyperedges(int n, int k,
                                       std::vector<std::vector<Vertex>> hyperedges) {
  if (n < 0 || k < 1) fail(ErrorKind::InvalidInput, "bad hypergraph header");
  Hypergraph h;
  h.k_ = k;
  h.incident_.assign(n, {});
  for (auto& e : hyperedges) {
    if (static_cast<int>(e.size()) != k) {
      fail(ErrorKind::InvalidInput, "hyperedge with " + std::to_string(e.size()) +
                                        " vertices, expected " + std::to_string(k));
    }
    for (Vertex v : e) check_vertex(v, n);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      fail(ErrorKind::InvalidInput, "hyperedge repeats a vertex");
    }
  }
  {
    auto sorted = hyperedges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(ErrorKind::InvalidInput, "duplicate hyperedge");
    }
  }
  h.hyperedges_ = std::move(hyperedges);
  for (int e = 0; e < h.m(); ++e) {
    for (Vertex v : h.hyperedges_[e]) h.incident_[v].push_back(e);
  }
  return h;
}

bool Hypergraph::intersects(int e, int f) const {
  const auto& a = hyperedges_[e];
  const auto& b = hyperedges_[f];
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

std::vector<Vertex> Hypergraph::neighborhood(Vertex v) const {
  std::vector<Vertex> out;
  for (int e : incident_[v]) {
    for (Vertex u : hyperedges_[e]) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Hypergraph::find(std::span<const Vertex> sorted_vertices) const {
  if (sorted_vertices.empty()) return -1;
  Vertex v = sorted_vertices.front();
  if (v < 0 || v >= n()) return -1;
  for (int e : incident_[v]) {
    if (std::equal(hyperedges_[e].begin(), hyperedges_[e].end(),
                   sorted_vertices.begin(), sorted_vertices.end())) {
      return e;
    }
  }
  return -1;
}

bool Hypergraph::is_connected() const {
  if (m() == 0) return false;
  for (const auto& inc : incident_) {
    if (inc.empty()) return false;
  }
  std::vector<char> seen(m(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int e = stack.back();
    stack.pop_back();
    for (Vertex v : hyperedges_[e]) {
      for (int f : incident_[v]) {
        if (!seen[f]) {
          seen[f] = 1;
          ++reached;
          stack.push_back(f);
        }
      }
    }
  }
  return reached == m();
}

Graph load_graph(std::string_view text) {
  auto rows = integer_rows(text);
  if (rows.empty() || rows[0].size() != 2) {
    fail(ErrorKind::InvalidInput, "expected header `n m`");
  }
  long long n = rows[0][0], m = rows[0][1];
  if (n < 1 || m < 0 || n > 1'000'000) {
    fail(ErrorKind::InvalidInput, "bad header values");
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    fail(ErrorKind::InvalidInput, "header says " + std::to_string(m) +
                                      " edges, found " +
                                      std::to_string(rows.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != 2) fail(ErrorKind::InvalidInput, "edge line needs two ids");
    check_vertex(rows[i][0], static_cast<int>(n));
    check_vertex(rows[i][1], static_cast<int>(n));
    edges.push_back({static_cast<Vertex>(rows[i][0]), static_cast<Vertex>(rows[i][1])});
  }
  Graph g = Graph::from_edges(static_cast<int>(n), edges);
  auto dist = bfs_distances(g, 0);
  for (int v = 0; v < g.n(); ++v) {
    if (dist[v] < 0) {
      fail(ErrorKind::InvalidInput,
           "graph is disconnected: vertex " + std::to_string(v) + " unreachable");
    }
  }
  return g;
}

Graph load_graph_file(const std::string& path) { return load_graph(read_file(path)); }

void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Hypergraph load_hypergraph(std::string_view text) {
  auto rows = integer_rows(text);
  if (rows.empty() || rows[0].size() != 3) {
    fail(ErrorKind::InvalidInput, "expected header `n m k`");
  }
  long long n = rows[0][0], m = rows[0][1], k = rows[0][2];
  if (n < 1 || m < 0 || k < 1 || k > n) {
    fail(ErrorKind::InvalidInput, "bad header values");
  }
  if (static_cast<long long>(rows.size()) - 1 != m) {
    fail(ErrorKind::InvalidInput, "header says " + std::to_string(m) +
                                      " hyperedges, found " +
                                      std::to_string(rows.size() - 1));
  }
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    std::vector<Vertex> e;
    for (long long v : rows[i]) {
      check_vertex(v, static_cast<int>(n));
      e.push_back(static_cast<Vertex>(v));
    }
    edges.push_back(std::move(e));
  }
  auto h = Hypergraph::from_hyperedges(static_cast<int>(n), static_cast<int>(k),
                                       std::move(edges));
  if (!h.is_connected()) fail(ErrorKind::InvalidInput, "hypergraph is disconnected");
  return h;
}

Hypergraph load_hypergraph_file(const std::string& path) {
  return load_hypergraph(read_file(path));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.n() << ' ' << h.m() << ' ' << h.k() << '\n';
  for (int e = 0; e < h.m(); ++e) {
    auto vs = h.hyperedge(e);
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
    out << '\n';
  }
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, std::span<const Vertex>(&source, 1));
}

std::vector<int> bfs_distances(const Graph& g, std::span<const Vertex> sources) {
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (dist[s] < 0) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

DistanceMatrix shortest_path_matrix(const Graph& g) {
  const int n = g.n();
  std::vector<int> values(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] < 0) fail(ErrorKind::InvalidInput, "graph is disconnected");
      values[static_cast<std::size_t>(s) * n + v] = row[v];
    }
  }
  return DistanceMatrix(n, std::move(values));
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  auto dist = bfs_distances(g, to);
  if (dist[from] < 0) fail(ErrorKind::Infeasible, "no path");
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

TreeDiameter tree_diameter(const Graph& g) {
  if (!g.is_tree()) fail(ErrorKind::InvalidInput, "graph is not a tree");
  auto farthest = [&](Vertex s) {
    auto dist = bfs_distances(g, s);
    Vertex best = s;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (dist[v] > dist[best]) best = v;
    }
    return best;
  };
  Vertex a = farthest(0);
  Vertex b = farthest(a);
  TreeDiameter out;
  out.path = shortest_path(g, a, b);
  out.length = static_cast<int>(out.path.size()) - 1;
  return out;
}

}  // namespace khwp
