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

#include "khwp/hypergraph_solver.hpp"

#include <algorithm>
#include <ostream>
#include <queue>

#include "khwp/config_space.hpp"
#include "khwp/error.hpp"
#include "khwp/tree_solvers.hpp"

namespace khwp {

void CscInstance::validate() const {
  if (host.size() != family.size()) {
    fail(ErrorKind::InvalidInput, "host graph and family differ in size");
  }
  const int f = static_cast<int>(family.size());
  for (int i = 0; i < f; ++i) {
    for (Vertex v : family[i]) {
      if (v < 0 || v >= universe) fail(ErrorKind::InvalidInput, "element out of range");
    }
    for (int j : host[i]) {
      if (j < 0 || j >= f || j == i) fail(ErrorKind::InvalidInput, "bad host edge");
      if (std::find(host[j].begin(), host[j].end(), i) == host[j].end()) {
        fail(ErrorKind::InvalidInput, "host graph is not symmetric");
      }
    }
  }
}

bool CscInstance::is_cover(const std::vector<int>& chosen) const {
  std::vector<char> seen(universe, 0);
  for (int i : chosen) {
    for (Vertex v : family[i]) seen[v] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
}

bool CscInstance::is_connected_in_host(const std::vector<int>& chosen) const {
  if (chosen.empty()) return false;
  std::vector<char> in(family.size(), 0), seen(family.size(), 0);
  for (int i : chosen) in[i] = 1;
  std::vector<int> stack{chosen[0]};
  seen[chosen[0]] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : host[x]) {
      if (in[y] && !seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  std::size_t distinct = std::count(in.begin(), in.end(), 1);
  return reached == distinct;
}

bool AugmentedLineGraph::adjacent(int e, int f) const {
  return std::binary_search(adj[e].begin(), adj[e].end(), f);
}

std::optional<AugmentedLineGraph::Label> AugmentedLineGraph::label(int e, int f) const {
  std::pair<int, int> key{std::min(e, f), std::max(e, f)};
  if (std::binary_search(shift_edges.begin(), shift_edges.end(), key)) return Label::Shift;
  if (std::binary_search(jump_edges.begin(), jump_edges.end(), key)) return Label::Jump;
  return std::nullopt;
}

bool jump_possible(const Hypergraph& h, int e, int f) {
  auto from = h.hyperedge(e);
  auto to = h.hyperedge(f);
  const int k = h.k();
  // ok[i][j]: the agent on from[i] may step to to[j].
  std::vector<std::vector<char>> ok(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    auto nb = h.neighborhood(from[i]);
    for (int j = 0; j < k; ++j) {
      ok[i][j] = std::binary_search(nb.begin(), nb.end(), to[j]);
    }
  }
  std::vector<int> match(k, -1);
  auto augment = [&](auto&& self, int i, std::vector<char>& seen) -> bool {
    for (int j = 0; j < k; ++j) {
      if (!ok[i][j] || seen[j]) continue;
      seen[j] = 1;
      if (match[j] < 0 || self(self, match[j], seen)) {
        match[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i) {
    std::vector<char> seen(k, 0);
    if (!augment(augment, i, seen)) return false;
  }
  return true;
}

AugmentedLineGraph build_lstar(const Hypergraph& h) {
  if (!h.is_connected()) {
    fail(ErrorKind::InvalidInput, "hypergraph is disconnected or leaves a vertex uncovered");
  }
  AugmentedLineGraph l;
  l.m = h.m();
  l.adj.assign(h.m(), {});
  for (int e = 0; e < h.m(); ++e) {
    // Candidates meet the union of the neighbourhoods of e's vertices.
    std::vector<int> cands;
    for (Vertex v : h.hyperedge(e)) {
      for (Vertex u : h.neighborhood(v)) {
        for (int f : h.incident(u)) {
          if (f > e) cands.push_back(f);
        }
      }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    for (int f : cands) {
      if (h.intersects(e, f)) {
        l.shift_edges.emplace_back(e, f);
      } else if (jump_possible(h, e, f)) {
        l.jump_edges.emplace_back(e, f);
      } else {
        continue;
      }
      l.adj[e].push_back(f);
      l.adj[f].push_back(e);
    }
  }
  for (auto& a : l.adj) std::sort(a.begin(), a.end());
  return l;
}

CscInstance csc_instance(const Hypergraph& h, const AugmentedLineGraph& lstar) {
  CscInstance inst;
  inst.universe = h.n();
  for (int e = 0; e < h.m(); ++e) {
    auto vs = h.hyperedge(e);
    inst.family.emplace_back(vs.begin(), vs.end());
  }
  inst.host = lstar.adj;
  return inst;
}

CoverResult greedy_connected_set_cover(const CscInstance& inst) {
  inst.validate();
  const int f = static_cast<int>(inst.family.size());
  std::vector<char> covered(inst.universe, 0), chosen(f, 0);
  int remaining = inst.universe;
  CoverResult out;
  auto gain = [&](int s) {
    int g = 0;
    for (Vertex v : inst.family[s]) g += !covered[v];
    return g;
  };
  auto take = [&](int s) {
    chosen[s] = 1;
    out.chosen.push_back(s);
    for (Vertex v : inst.family[s]) {
      if (!covered[v]) {
        covered[v] = 1;
        --remaining;
      }
    }
  };
  auto best_of = [&](auto&& allowed) {
    int best = -1, best_gain = 0;
    for (int s = 0; s < f; ++s) {
      if (chosen[s] || !allowed(s)) continue;
      int g = gain(s);
      if (g > best_gain) {
        best = s;
        best_gain = g;
      }
    }
    return best;
  };

  int seed = best_of([](int) { return true; });
  if (seed < 0) {
    if (remaining == 0 && f > 0) return {{0}};
    fail(ErrorKind::Infeasible, "family covers nothing");
  }
  take(seed);
  while (remaining > 0) {
    int next = best_of([&](int s) {
      return std::any_of(inst.host[s].begin(), inst.host[s].end(),
                         [&](int t) { return chosen[t] != 0; });
    });
    if (next >= 0) {
      take(next);
      continue;
    }
    int target = best_of([](int) { return true; });
    if (target < 0) fail(ErrorKind::Infeasible, "family does not cover the universe");
    // Shortest host path from the chosen component to target.
    std::vector<int> parent(f, -2);
    std::queue<int> q;
    for (int s = 0; s < f; ++s) {
      if (chosen[s]) {
        parent[s] = -1;
        q.push(s);
      }
    }
    while (!q.empty() && parent[target] == -2) {
      int x = q.front();
      q.pop();
      for (int y : inst.host[x]) {
        if (parent[y] == -2) {
          parent[y] = x;
          q.push(y);
        }
      }
    }
    if (parent[target] == -2) fail(ErrorKind::Infeasible, "host graph is disconnected");
    std::vector<int> splice;
    for (int x = target; parent[x] != -1; x = parent[x]) splice.push_back(x);
    std::reverse(splice.begin(), splice.end());
    for (int s : splice) take(s);
  }
  return out;
}

std::vector<int> walk_through_cover(const std::vector<std::vector<int>>& host,
                                    const std::vector<int>& cover) {
  if (cover.empty()) return {};
  // BFS spanning tree of the cover inside the host, relabelled 0..c-1.
  const int c = static_cast<int>(cover.size());
  std::vector<int> local(host.size(), -1);
  for (int i = 0; i < c; ++i) local[cover[i]] = i;
  std::vector<Edge> edges;
  std::vector<char> seen(c, 0);
  std::queue<int> q;
  seen[0] = 1;
  q.push(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : host[cover[x]]) {
      int ly = local[y];
      if (ly >= 0 && !seen[ly]) {
        seen[ly] = 1;
        edges.push_back({x, ly});
        q.push(ly);
      }
    }
  }
  if (static_cast<int>(edges.size()) != c - 1) {
    fail(ErrorKind::InvariantViolation, "cover is not connected in the host graph");
  }
  auto tree = Graph::from_edges(c, edges);
  // The doubled tree walked from one end of a longest path and stopped at the
  // other end: every edge twice except those on that path.
  auto order = one_hwp_tree(tree);
  std::vector<int> out;
  out.reserve(order.size());
  for (Vertex x : order) out.push_back(cover[x]);
  return out;
}

HyperSolve solve_khwp_hypergraph(const Hypergraph& h) {
  HyperSolve out;
  out.lstar = build_lstar(h);
  auto inst = csc_instance(h, out.lstar);
  out.cover = greedy_connected_set_cover(inst);
  out.walk.hyperedges = walk_through_cover(inst.host, out.cover.chosen);
  auto report = validate_hyper_walk(h, out.lstar, out.walk);
  if (!report.ok()) fail(ErrorKind::InvariantViolation, "hypergraph walk failed validation");
  return out;
}

HyperWalkReport validate_hyper_walk(const Hypergraph& h, const AugmentedLineGraph& lstar,
                                    const HyperWalk& walk) {
  HyperWalkReport r;
  r.length = walk.length();
  std::vector<char> seen(h.n(), 0);
  for (std::size_t t = 0; t < walk.hyperedges.size(); ++t) {
    int e = walk.hyperedges[t];
    if (e < 0 || e >= h.m()) {
      if (r.bad_step < 0) r.bad_step = static_cast<int>(t);
      continue;
    }
    for (Vertex v : h.hyperedge(e)) seen[v] = 1;
    if (t > 0 && r.bad_step < 0 && !lstar.adjacent(walk.hyperedges[t - 1], e)) {
      r.bad_step = static_cast<int>(t);
    }
  }
  r.covering = std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  return r;
}

void write_hyper_walk(std::ostream& out, const Hypergraph& h,
                      const AugmentedLineGraph& lstar, const HyperWalk& walk) {
  auto r = validate_hyper_walk(h, lstar, walk);
  out << "k " << h.k() << " length " << walk.length() << " spanning " << (r.covering ? 1 : 0)
      << '\n';
  for (std::size_t t = 0; t < walk.hyperedges.size(); ++t) {
    out << t << ": e" << walk.hyperedges[t] << '\n';
  }
}

TransitionWalk solve_khwp_graph_csc(const Graph& g, int k, const Caps& caps) {
  if (k < 1 || k > g.n()) fail(ErrorKind::InvalidInput, "k out of range");
  if (k > caps.csc_graph_max_k) {
    fail(ErrorKind::CapExceeded, "k = " + std::to_string(k) + " above the cap of " +
                                     std::to_string(caps.csc_graph_max_k));
  }
  ConfigurationSpace space(g, k);
  CscInstance inst;
  inst.universe = g.n();
  for (int id = 0; id < space.size(); ++id) {
    auto s = space.set(id);
    inst.family.emplace_back(s.begin(), s.end());
    auto nb = space.neighbors(id);
    inst.host.emplace_back(nb.begin(), nb.end());
  }
  auto cover = greedy_connected_set_cover(inst);
  auto order = walk_through_cover(inst.host, cover.chosen);
  TransitionWalk walk{k, {}};
  for (int id : order) {
    auto s = space.set(id);
    if (walk.configs.empty()) {
      walk.configs.emplace_back(s.begin(), s.end());
      continue;
    }
    auto aligned = align_slots(g, walk.configs.back(), s);
    if (!aligned) fail(ErrorKind::InvariantViolation, "cover walk took a non-adjacent step");
    walk.configs.push_back(std::move(*aligned));
  }
  auto report = validate_walk(g, walk);
  if (!report.ok()) fail(ErrorKind::InvariantViolation, "cover walk failed validation");
  return walk;
}

}  // namespace khwp
