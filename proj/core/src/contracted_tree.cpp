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

#include "khwp/contracted_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "khwp/error.hpp"

namespace khwp {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
};

class Builder {
 public:
  Builder(const Graph& g) : g_(g), spanned_(g.n(), 0) {}

  int add_node(TrNode node) {
    tr_.nodes.push_back(node);
    degree_.push_back(0);
    sets_.add();
    spanned_[node.a] = spanned_[node.b] = 1;
    return static_cast<int>(tr_.nodes.size()) - 1;
  }

  bool link(int x, int y) {
    if (!sets_.unite(x, y)) return false;
    tr_.edges.emplace_back(x, y);
    ++degree_[x];
    ++degree_[y];
    return true;
  }

  // Node holding v, preferring odd contracted nodes (the new edge evens
  // them out), then plain nodes, then even contracted nodes.
  std::pair<int, int> attach_point(Vertex v) const {
    std::pair<int, int> best{3, -1};
    for (int i = 0; i < static_cast<int>(tr_.nodes.size()); ++i) {
      const auto& node = tr_.nodes[i];
      if (!node.holds(v)) continue;
      int rank = !node.contracted ? 1 : (degree_[i] % 2 ? 0 : 2);
      if (rank < best.first) best = {rank, i};
    }
    return best;
  }

  const Graph& g_;
  ContractedTree tr_;
  std::vector<int> degree_;
  std::vector<char> spanned_;
  DisjointSets sets_;
};

/// Vertex pairs of the gadget nodes, in chain order.
std::vector<std::pair<Vertex, Vertex>> gadget_pairs(const PackingInstance& inst,
                                                    const PackingSet& s) {
  if (s.kind == SetKind::I || s.kind == SetKind::II) {
    const auto& c = inst.cycles[s.origin];
    return {{c[0], c[1]}, {c[3], c[2]}};
  }
  const auto& v = inst.grids[s.origin].v;
  return {{v[0], v[1]}, {v[3], v[2]}, {v[4], v[5]}};
}

}  // namespace

std::vector<int> ContractedTree::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (auto [x, y] : edges) {
    ++deg[x];
    ++deg[y];
  }
  return deg;
}

int ContractedTree::n_odd_c() const {
  auto deg = degrees();
  int count = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].contracted && !nodes[i].seed && deg[i] % 2) ++count;
  }
  return count;
}

bool ContractedTree::is_tree_ignoring_parallel() const {
  std::set<std::pair<int, int>> distinct;
  for (auto [x, y] : edges) distinct.insert({std::min(x, y), std::max(x, y)});
  if (nodes.empty() || distinct.size() != nodes.size() - 1) return false;
  DisjointSets ds;
  for (std::size_t i = 0; i < nodes.size(); ++i) ds.add();
  for (auto [x, y] : distinct) {
    if (!ds.unite(x, y)) return false;
  }
  return true;
}

TypeCounts count_types(const PackingInstance& inst, const PackingSolution& sol) {
  TypeCounts t;
  for (int i : sol.chosen) {
    switch (inst.sets[i].kind) {
      case SetKind::I: ++t.i; break;
      case SetKind::II: ++t.ii; break;
      case SetKind::III: ++t.iii; break;
      case SetKind::IV: ++t.iv; break;
    }
  }
  return t;
}

long long predicted_edge_count(int n, const TypeCounts& t) {
  return static_cast<long long>(t.i) + 2LL * t.ii + 2LL * t.iii + 3LL * t.iv +
         (n - t.weight()) + 2LL * (t.i + t.iii - 1);
}

ContractedTree build_tr_graph(const Graph& g, const PackingInstance& inst,
                              const PackingSolution& sol) {
  check_disjoint(inst, sol);
  for (int i : sol.chosen) {
    const auto& s = inst.sets[i];
    bool present = (s.kind == SetKind::I || s.kind == SetKind::II)
                       ? (s.origin < static_cast<int>(inst.cycles.size()) &&
                          [&] {
                            const auto& c = inst.cycles[s.origin];
                            return g.has_edge(c[0], c[1]) && g.has_edge(c[1], c[2]) &&
                                   g.has_edge(c[2], c[3]) && g.has_edge(c[3], c[0]);
                          }())
                       : (s.origin < static_cast<int>(inst.grids.size()) &&
                          inst.grids[s.origin].embeds_in(g));
    if (!present) {
      fail(ErrorKind::InvalidInput, "packing set " + std::to_string(i) +
                                        " refers to a pattern missing from the graph");
    }
  }

  Builder b(g);
  // Phase 1: gadgets.
  std::vector<std::vector<int>> gadget(inst.sets.size());
  for (int i : sol.chosen) {
    const auto& s = inst.sets[i];
    for (auto [x, y] : gadget_pairs(inst, s)) {
      gadget[i].push_back(b.add_node({true, x, y, i, false}));
    }
    for (std::size_t j = 1; j < gadget[i].size(); ++j) b.link(gadget[i][j - 1], gadget[i][j]);
    if (s.kind == SetKind::I || s.kind == SetKind::II) {
      b.tr_.short_gadgets.emplace_back(gadget[i][0], gadget[i][1]);
    }
  }
  auto node_with = [&](int set, Vertex v) {
    for (int node : gadget[set]) {
      if (b.tr_.nodes[node].holds(v)) return node;
    }
    return -1;
  };
  for (int i : sol.chosen) {
    const auto& s = inst.sets[i];
    if (!s.replaced) continue;
    int owner = owner_of(inst, sol, *s.replaced);
    if (owner < 0 || owner == i) continue;
    b.link(node_with(i, *s.replaced), node_with(owner, *s.replaced));
  }

  // Phase 2: leftover vertices, seeding with one edge when nothing is there.
  if (b.tr_.nodes.empty()) {
    Edge e = g.edges().front();
    b.add_node({true, e.u, e.v, -1, true});
  }
  while (true) {
    Vertex pick = -1;
    std::pair<int, int> where{3, -1};
    Vertex via = -1;
    for (Vertex v = 0; v < g.n() && pick < 0; ++v) {
      if (b.spanned_[v]) continue;
      for (Vertex w : g.neighbors(v)) {
        if (!b.spanned_[w]) continue;
        auto cand = b.attach_point(w);
        if (cand.first < where.first) {
          where = cand;
          via = w;
          pick = v;
        }
      }
    }
    if (pick < 0) break;
    int node = b.add_node({false, pick, via, -1, false});
    b.link(node, where.second);
  }

  // Phase 3: merge components along edges of G, in sorted order.
  for (Edge e : g.edges()) {
    auto [ru, nu] = b.attach_point(e.u);
    auto [rv, nv] = b.attach_point(e.v);
    (void)ru;
    (void)rv;
    if (b.sets_.find(nu) == b.sets_.find(nv)) continue;
    int node = b.add_node({true, e.u, e.v, -1, false});
    b.link(node, nu);
    b.link(node, nv);
  }

  for (Vertex v = 0; v < g.n(); ++v) {
    if (!b.spanned_[v]) {
      fail(ErrorKind::InvariantViolation, "vertex " + std::to_string(v) + " left unspanned");
    }
  }
  ContractedTree tr = std::move(b.tr_);
  tr.built_edges = static_cast<int>(tr.edges.size());
  if (!tr.is_tree_ignoring_parallel()) {
    fail(ErrorKind::InvariantViolation, "construction did not produce a spanning tree");
  }
  return tr;
}

ContractedTree modify_tr(ContractedTree tr) {
  auto deg = tr.degrees();
  for (auto [x, y] : tr.short_gadgets) {
    if (deg[x] % 2 && deg[y] % 2) {
      tr.edges.emplace_back(x, y);
      ++deg[x];
      ++deg[y];
      ++tr.parallel_edges;
    }
  }
  return tr;
}

}  // namespace khwp
