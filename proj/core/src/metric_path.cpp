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

#include "khwp/metric_path.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "khwp/error.hpp"

namespace khwp {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

Matching exact_matching(const MetricInstance& inst, const std::vector<int>& odd) {
  const int o = static_cast<int>(odd.size());
  const std::size_t states = std::size_t{1} << o;
  // memo[e][mask]: cheapest way to settle points outside mask using exactly e
  // more exclusions.
  std::vector<std::vector<long long>> memo(3, std::vector<long long>(states, -1));
  const std::size_t full = states - 1;
  auto solve = [&](auto&& self, std::size_t mask, int e) -> long long {
    if (mask == full) return e == 0 ? 0 : kInf;
    auto& slot = memo[e][mask];
    if (slot >= 0) return slot;
    int i = std::countr_one(mask);
    long long best = kInf;
    if (e > 0) best = self(self, mask | (std::size_t{1} << i), e - 1);
    for (int j = i + 1; j < o; ++j) {
      if (mask >> j & 1) continue;
      long long rest = self(self, mask | (std::size_t{1} << i) | (std::size_t{1} << j), e);
      if (rest < kInf) best = std::min(best, inst(odd[i], odd[j]) + rest);
    }
    return slot = best;
  };

  Matching out;
  out.cost = solve(solve, 0, 2);
  std::vector<int> excluded;
  std::size_t mask = 0;
  int e = 2;
  while (mask != full) {
    int i = std::countr_one(mask);
    long long here = solve(solve, mask, e);
    if (e > 0 && solve(solve, mask | (std::size_t{1} << i), e - 1) == here) {
      excluded.push_back(odd[i]);
      mask |= std::size_t{1} << i;
      --e;
      continue;
    }
    for (int j = i + 1; j < o; ++j) {
      if (mask >> j & 1) continue;
      auto next = mask | (std::size_t{1} << i) | (std::size_t{1} << j);
      long long rest = solve(solve, next, e);
      if (rest < kInf && inst(odd[i], odd[j]) + rest == here) {
        out.pairs.emplace_back(odd[i], odd[j]);
        mask = next;
        break;
      }
    }
  }
  out.unmatched = {excluded[0], excluded[1]};
  return out;
}

Matching greedy_matching(const MetricInstance& inst, const std::vector<int>& odd) {
  std::vector<std::pair<long long, WeightedEdge>> candidates;
  for (std::size_t i = 0; i < odd.size(); ++i) {
    for (std::size_t j = i + 1; j < odd.size(); ++j) {
      candidates.push_back({inst(odd[i], odd[j]), {odd[i], odd[j]}});
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::vector<char> used(inst.size(), 0);
  Matching out;
  out.heuristic = true;
  std::size_t matched = 0;
  for (const auto& [w, pair] : candidates) {
    if (matched + 2 >= odd.size()) break;
    if (used[pair.first] || used[pair.second]) continue;
    used[pair.first] = used[pair.second] = 1;
    out.pairs.push_back(pair);
    out.cost += w;
    matched += 2;
  }
  std::vector<int> left;
  for (int v : odd) {
    if (!used[v]) left.push_back(v);
  }
  out.unmatched = {left[0], left[1]};
  return out;
}

}  // namespace

MetricInstance::MetricInstance(int size, std::vector<long long> dist)
    : size_(size), dist_(std::move(dist)) {
  if (size < 0 || dist_.size() != static_cast<std::size_t>(size) * size) {
    fail(ErrorKind::InvalidInput, "distance table has the wrong size");
  }
}

MetricInstance MetricInstance::closure_of(const Graph& g) {
  auto d = shortest_path_matrix(g);
  return MetricInstance(g.n(), std::vector<long long>(d.values().begin(), d.values().end()));
}

void MetricInstance::validate() const {
  for (int a = 0; a < size_; ++a) {
    if ((*this)(a, a) != 0) fail(ErrorKind::InvalidInput, "nonzero diagonal");
    for (int b = 0; b < size_; ++b) {
      if ((*this)(a, b) < 0) fail(ErrorKind::InvalidInput, "negative distance");
      if ((*this)(a, b) != (*this)(b, a)) fail(ErrorKind::InvalidInput, "asymmetric distance");
      for (int c = 0; c < size_; ++c) {
        if ((*this)(a, c) > (*this)(a, b) + (*this)(b, c)) {
          fail(ErrorKind::InvalidInput, "triangle inequality fails at " + std::to_string(a) +
                                            " " + std::to_string(b) + " " +
                                            std::to_string(c));
        }
      }
    }
  }
}

SpanningTree mst(const MetricInstance& inst) {
  const int n = inst.size();
  SpanningTree out;
  if (n == 0) return out;
  std::vector<long long> best(n, kInf);
  std::vector<int> from(n, -1);
  std::vector<char> in_tree(n, 0);
  best[0] = 0;
  for (int round = 0; round < n; ++round) {
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (!in_tree[v] && (u < 0 || best[v] < best[u])) u = v;
    }
    in_tree[u] = 1;
    if (from[u] >= 0) {
      out.edges.emplace_back(std::min(from[u], u), std::max(from[u], u));
      out.cost += inst(from[u], u);
    }
    for (int v = 0; v < n; ++v) {
      if (!in_tree[v] && inst(u, v) < best[v]) {
        best[v] = inst(u, v);
        from[v] = u;
      }
    }
  }
  return out;
}

Matching min_matching_except_two(const MetricInstance& inst, const std::vector<int>& odd,
                                 const Caps& caps) {
  if (odd.size() % 2 != 0) {
    fail(ErrorKind::InvariantViolation,
         "odd point count " + std::to_string(odd.size()) + " is not even");
  }
  if (odd.empty()) return {};
  if (static_cast<int>(odd.size()) <= std::min(caps.exact_matching_max_odd, 24)) {
    return exact_matching(inst, odd);
  }
  return greedy_matching(inst, odd);
}

std::vector<int> euler_path(int points, const std::vector<WeightedEdge>& multigraph) {
  std::vector<std::vector<std::pair<int, int>>> adj(points);
  for (std::size_t id = 0; id < multigraph.size(); ++id) {
    auto [a, b] = multigraph[id];
    if (a < 0 || b < 0 || a >= points || b >= points) {
      fail(ErrorKind::InvalidInput, "edge endpoint out of range");
    }
    adj[a].emplace_back(b, static_cast<int>(id));
    adj[b].emplace_back(a, static_cast<int>(id));
  }
  std::vector<int> odd;
  for (int v = 0; v < points; ++v) {
    if (adj[v].size() % 2) odd.push_back(v);
  }
  if (odd.size() != 0 && odd.size() != 2) {
    fail(ErrorKind::InvalidInput,
         "euler path needs 0 or 2 odd points, found " + std::to_string(odd.size()));
  }
  int start = 0;
  if (!odd.empty()) {
    start = odd[0];
  } else {
    while (start < points && adj[start].empty()) ++start;
    if (start == points) return points > 0 ? std::vector<int>{0} : std::vector<int>{};
  }
  // Iterative Hierholzer.
  std::vector<char> used(multigraph.size(), 0);
  std::vector<std::size_t> cursor(points, 0);
  std::vector<int> stack{start}, out;
  while (!stack.empty()) {
    int v = stack.back();
    auto& c = cursor[v];
    while (c < adj[v].size() && used[adj[v][c].second]) ++c;
    if (c == adj[v].size()) {
      out.push_back(v);
      stack.pop_back();
    } else {
      used[adj[v][c].second] = 1;
      stack.push_back(adj[v][c].first);
    }
  }
  if (out.size() != multigraph.size() + 1) {
    fail(ErrorKind::InvalidInput, "multigraph is disconnected");
  }
  std::reverse(out.begin(), out.end());
  return out;
}

HamiltonianPath christofides_path(const MetricInstance& inst,
                                  const std::vector<WeightedEdge>& base, const Caps& caps) {
  HamiltonianPath out;
  const int n = inst.size();
  if (n == 0) return out;
  if (n == 1) {
    out.order = {0};
    return out;
  }
  std::vector<int> degree(n, 0);
  auto multigraph = base;
  for (auto [a, b] : base) {
    ++degree[a];
    ++degree[b];
    out.euler_cost += inst(a, b);
  }
  std::vector<int> odd;
  for (int v = 0; v < n; ++v) {
    if (degree[v] % 2) odd.push_back(v);
  }
  auto matching = min_matching_except_two(inst, odd, caps);
  out.matching_cost = matching.cost;
  out.heuristic = matching.heuristic;
  out.euler_cost += matching.cost;
  multigraph.insert(multigraph.end(), matching.pairs.begin(), matching.pairs.end());

  auto tour = euler_path(n, multigraph);
  std::vector<char> seen(n, 0);
  for (int v : tour) {
    if (!seen[v]) {
      seen[v] = 1;
      out.order.push_back(v);
    }
  }
  if (static_cast<int>(out.order.size()) != n) {
    fail(ErrorKind::InvalidInput, "spanning multigraph misses a point");
  }
  out.cost = path_cost(inst, out.order);
  if (out.cost > out.euler_cost) {
    fail(ErrorKind::InvariantViolation, "shortcutting increased the cost");
  }
  return out;
}

HamiltonianPath metric_hamiltonian_path(const MetricInstance& inst, const Caps& caps) {
  return christofides_path(inst, mst(inst).edges, caps);
}

long long path_cost(const MetricInstance& inst, const std::vector<int>& order) {
  long long total = 0;
  for (std::size_t i = 1; i < order.size(); ++i) total += inst(order[i - 1], order[i]);
  return total;
}

}  // namespace khwp
