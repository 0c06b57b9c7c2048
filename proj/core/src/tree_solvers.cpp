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

#include "khwp/tree_solvers.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "khwp/error.hpp"

namespace khwp {

namespace {

constexpr Vertex kNone = -1;

struct DepthFirst {
  std::vector<Vertex> walk;
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

DepthFirst run_depth_first(const Graph& tree, const std::vector<Vertex>& path) {
  const int n = tree.n();
  std::vector<char> on_path(n, 0);
  for (Vertex v : path) on_path[v] = 1;
  DepthFirst out;
  out.parent.assign(n, kNone);
  std::vector<char> explored(n, 0);
  Vertex v = path.front();
  const Vertex goal = path.back();
  explored[v] = 1;
  out.walk.push_back(v);
  out.order.push_back(v);
  while (v != goal) {
    Vertex next = kNone;
    for (Vertex w : tree.neighbors(v)) {
      if (!explored[w] && !on_path[w]) {
        next = w;
        break;
      }
    }
    if (next == kNone) {
      for (Vertex w : tree.neighbors(v)) {
        if (!explored[w]) {
          next = w;
          break;
        }
      }
    }
    if (next != kNone) {
      explored[next] = 1;
      out.parent[next] = v;
      out.order.push_back(next);
      v = next;
    } else {
      v = out.parent[v];
      if (v == kNone) fail(ErrorKind::InvariantViolation, "walk backtracked past its start");
    }
    out.walk.push_back(v);
  }
  return out;
}

/// Distances inside the subgraph induced by `occupied` from source.
std::vector<int> occupied_distances(const Graph& tree, const std::vector<char>& occupied,
                                    Vertex source) {
  std::vector<int> dist(tree.n(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : tree.neighbors(x)) {
      if (occupied[y] && dist[y] < 0) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<Vertex> one_hwp_tree(const Graph& tree) {
  auto diam = tree_diameter(tree);
  return run_depth_first(tree, diam.path).walk;
}

TransitionWalk k_rhwp_tree(const Graph& tree, int k, std::vector<RhwpStep>* trace) {
  if (!tree.is_tree()) fail(ErrorKind::InvalidInput, "graph is not a tree");
  const int n = tree.n();
  if (k < 1 || k > n) {
    fail(ErrorKind::InvalidInput,
         "k = " + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  if (k == 1) return as_walk(one_hwp_tree(tree));

  const auto diam = tree_diameter(tree);
  const auto& path = diam.path;
  const Vertex goal = path.back();
  const auto to_path = bfs_distances(tree, path);
  std::vector<char> on_path(n, 0);
  for (Vertex v : path) on_path[v] = 1;

  auto seed = run_depth_first(tree, path);
  std::vector<Vertex> parent(n, kNone);
  std::vector<char> explored(n, 0);
  std::vector<char> occupied(n, 0);
  // slot_of[v]: the agent standing on v, or -1.
  std::vector<int> slot_of(n, -1);
  Configuration config(seed.order.begin(), seed.order.begin() + k);
  for (int i = 0; i < k; ++i) {
    Vertex v = config[i];
    explored[v] = 1;
    occupied[v] = 1;
    slot_of[v] = i;
    parent[v] = seed.parent[v];
  }
  Vertex head = config.back();
  Vertex tail = config.front();

  TransitionWalk walk{k, {config}};
  auto has_unexplored = [&](Vertex v) {
    return std::any_of(tree.neighbors(v).begin(), tree.neighbors(v).end(),
                       [&](Vertex w) { return !explored[w]; });
  };
  auto closest_to_path = [&](auto&& candidates) {
    Vertex best = kNone;
    for (Vertex v : candidates) {
      if (best == kNone || to_path[v] < to_path[best] ||
          (to_path[v] == to_path[best] && v < best)) {
        best = v;
      }
    }
    return best;
  };

  const int max_steps = 4 * n;
  while (head != goal) {
    if (walk.length() >= max_steps) {
      fail(ErrorKind::InvariantViolation, "k_rhwp_tree did not terminate");
    }
    std::vector<Vertex> occ;
    for (Vertex v : config) occ.push_back(v);
    std::sort(occ.begin(), occ.end());

    Vertex target = kNone;
    bool head_open = has_unexplored(head);
    bool other_open = std::any_of(occ.begin(), occ.end(), [&](Vertex v) {
      return v != head && has_unexplored(v);
    });
    if (head_open || other_open) {
      if (!head_open) {
        auto dist = occupied_distances(tree, occupied, head);
        Vertex best = kNone;
        for (Vertex v : occ) {
          if (v == head || !has_unexplored(v)) continue;
          if (best == kNone || dist[v] < dist[best]) best = v;
        }
        tail = head;
        head = best;
      }
      for (Vertex w : tree.neighbors(head)) {
        if (!explored[w] && !on_path[w]) {
          target = w;
          break;
        }
      }
      if (target == kNone) {
        for (Vertex w : tree.neighbors(head)) {
          if (!explored[w]) {
            target = w;
            break;
          }
        }
      }
      parent[target] = head;
    } else {
      Vertex v = closest_to_path(occ);
      if (v != head) {
        tail = head;
        head = v;
      }
      target = parent[head];
    }
    if (target == kNone || occupied[target]) {
      fail(ErrorKind::InvariantViolation,
           "head " + std::to_string(head) + " has no free target");
    }

    auto degree_in = [&](Vertex v) {
      int d = 0;
      for (Vertex w : tree.neighbors(v)) d += occupied[w];
      return d;
    };
    if (degree_in(tail) > 1) {
      std::vector<Vertex> leaves;
      for (Vertex v : occ) {
        if (degree_in(v) <= 1) leaves.push_back(v);
      }
      Vertex nearest = closest_to_path(leaves);
      Vertex pick = kNone;
      for (Vertex v : leaves) {
        if (v != nearest && v != head) {
          pick = v;
          break;
        }
      }
      tail = pick != kNone ? pick : nearest;
    }

    // Path head = p_1, ..., p_q = tail inside the occupied subtree.
    auto dist = occupied_distances(tree, occupied, head);
    if (dist[tail] < 0) fail(ErrorKind::InvariantViolation, "occupied set disconnected");
    std::vector<Vertex> chain{tail};
    while (chain.back() != head) {
      Vertex x = chain.back();
      for (Vertex y : tree.neighbors(x)) {
        if (occupied[y] && dist[y] == dist[x] - 1) {
          chain.push_back(y);
          break;
        }
      }
    }
    std::reverse(chain.begin(), chain.end());

    const Vertex mover = head, anchor = tail;
    Configuration next = config;
    next[slot_of[chain[0]]] = target;
    for (std::size_t i = 1; i < chain.size(); ++i) next[slot_of[chain[i]]] = chain[i - 1];
    for (Vertex v : config) {
      occupied[v] = 0;
      slot_of[v] = -1;
    }
    for (int i = 0; i < k; ++i) {
      occupied[next[i]] = 1;
      slot_of[next[i]] = i;
    }
    explored[target] = 1;
    head = target;
    tail = chain.size() >= 2 ? chain[chain.size() - 2] : target;
    config = std::move(next);
    walk.configs.push_back(config);
    if (trace) trace->push_back({head, tail, mover, anchor});
  }
  return walk;
}

}  // namespace khwp
