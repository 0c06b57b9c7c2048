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

#include "khwp/approx_2hwp.hpp"

#include <algorithm>
#include <queue>

#include "khwp/config_space.hpp"
#include "khwp/error.hpp"
#include "khwp/oracle.hpp"

namespace khwp {

namespace {

std::vector<int> bfs_in_space(const ConfigurationSpace& space, int source) {
  std::vector<int> dist(space.size(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : space.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

int config_id(const ConfigurationSpace& space, Vertex a, Vertex b) {
  Vertex pair[2] = {std::min(a, b), std::max(a, b)};
  int id = space.find(pair);
  if (id < 0) fail(ErrorKind::InvariantViolation, "tree node is not an edge of G");
  return id;
}

void append_config(const Graph& g, TransitionWalk& walk, std::span<const Vertex> set) {
  if (walk.configs.empty()) {
    walk.configs.emplace_back(set.begin(), set.end());
    return;
  }
  auto aligned = align_slots(g, walk.configs.back(), set);
  if (!aligned) fail(ErrorKind::InvariantViolation, "expansion produced a non-adjacent step");
  walk.configs.push_back(std::move(*aligned));
}

void check_walk(const Graph& g, const TransitionWalk& w, const char* who) {
  auto report = validate_walk(g, w);
  if (!report.ok()) {
    fail(ErrorKind::InvariantViolation,
         std::string(who) + " emitted an invalid walk: " +
             (report.violation ? report.violation->message : "not spanning"));
  }
  if (report.histogram[0] != 0) {
    fail(ErrorKind::InvariantViolation, std::string(who) + " emitted a 0-transition");
  }
}

}  // namespace

TransitionWalk simple_3approx(const Graph& g, const Caps& caps) {
  if (g.n() < 2) fail(ErrorKind::InvalidInput, "need at least two vertices");
  auto metric = MetricInstance::closure_of(g);
  auto path = metric_hamiltonian_path(metric, caps);
  std::vector<Vertex> w1{path.order.front()};
  for (std::size_t i = 1; i < path.order.size(); ++i) {
    auto hop = shortest_path(g, path.order[i - 1], path.order[i]);
    w1.insert(w1.end(), hop.begin() + 1, hop.end());
  }
  auto walk = drop_zero_transitions(g, one_to_two(g, w1));
  check_walk(g, walk, "simple_3approx");
  return walk;
}

Alg2Result alg2(const Graph& g, PackingMode mode, const Caps& caps) {
  if (g.n() < 2) fail(ErrorKind::InvalidInput, "need at least two vertices");
  if (!g.is_connected()) fail(ErrorKind::InvalidInput, "graph is disconnected");
  Alg2Result out;
  auto& d = out.diagnostics;
  out.instance = build_sp_instance(g);
  d.c4_count = static_cast<int>(out.instance.cycles.size());
  d.grid_count = static_cast<int>(out.instance.grids.size());

  auto raw = approx_set_packing(out.instance, mode, caps);
  out.packing = normalize_anchors(out.instance, raw);
  d.dropped_sets = static_cast<int>(raw.chosen.size() - out.packing.chosen.size());
  d.packing_weight = out.packing.weight;
  d.types = count_types(out.instance, out.packing);

  auto built = build_tr_graph(g, out.instance, out.packing);
  d.tr_nodes = static_cast<int>(built.nodes.size());
  d.len_tr = built.built_edges;
  d.predicted_edges = predicted_edge_count(g.n(), d.types);
  out.tree = modify_tr(std::move(built));
  d.parallel_edges = out.tree.parallel_edges;
  d.n_odd_c = out.tree.n_odd_c();
  d.odd_bound = d.types.i + d.types.ii + 2 * d.types.iii + 3 * d.types.iv;
  d.odd_bound_holds = d.n_odd_c <= d.odd_bound;

  // Distances between tree nodes are hop counts in the 2-agent configuration
  // graph, so every tree edge weighs at most one and shortcuts never cost
  // more than the detour they replace.
  ConfigurationSpace space(g, 2);
  const int t = static_cast<int>(out.tree.nodes.size());
  std::vector<int> ids(t);
  for (int i = 0; i < t; ++i) {
    ids[i] = config_id(space, out.tree.nodes[i].a, out.tree.nodes[i].b);
  }
  std::vector<long long> table(static_cast<std::size_t>(t) * t);
  for (int i = 0; i < t; ++i) {
    auto dist = bfs_in_space(space, ids[i]);
    for (int j = 0; j < t; ++j) {
      if (dist[ids[j]] < 0) fail(ErrorKind::InvariantViolation, "configuration graph split");
      table[static_cast<std::size_t>(i) * t + j] = dist[ids[j]];
    }
  }
  MetricInstance metric(t, std::move(table));
  auto path = christofides_path(metric, out.tree.edges, caps);
  d.matching_cost = path.matching_cost;
  d.euler_cost = path.euler_cost;
  d.path_cost = path.cost;
  d.matching_heuristic = path.heuristic;

  // Unfold each hop of the path into a shortest run of configurations.
  out.walk.k = 2;
  append_config(g, out.walk, space.set(ids[path.order.front()]));
  for (std::size_t i = 1; i < path.order.size(); ++i) {
    int from = ids[path.order[i - 1]], to = ids[path.order[i]];
    if (from == to) continue;
    auto dist = bfs_in_space(space, to);
    for (int cur = from; cur != to;) {
      for (int nxt : space.neighbors(cur)) {
        if (dist[nxt] == dist[cur] - 1) {
          cur = nxt;
          break;
        }
      }
      append_config(g, out.walk, space.set(cur));
    }
  }
  d.walk_length = out.walk.length();
  check_walk(g, out.walk, "alg2");
  if (d.walk_length > d.euler_cost) {
    fail(ErrorKind::InvariantViolation, "walk is longer than the Euler traversal");
  }
  return out;
}

SpBoundReport sp_lower_bound_check(const Graph& g, const Caps& caps) {
  SpBoundReport r;
  r.n = g.n();
  auto inst = build_sp_instance(g);
  r.packing_optimum = exact_set_packing(inst, caps).weight;
  r.h2 = exact_hk(g, 2, false, caps).length;
  r.bound = r.n - r.packing_optimum / 2.0 - 1.0;
  r.holds = r.h2 >= r.bound;
  r.slack = r.h2 - r.bound;
  return r;
}

}  // namespace khwp
