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

#include "khwp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "khwp/config_space.hpp"
#include "khwp/error.hpp"
#include "khwp/hypergraph_solver.hpp"

namespace khwp {

namespace {

using Mask = std::uint64_t;

/// BFS over (node, covered) pairs. States are packed as node << n | covered.
/// Returns the node sequence of a shortest covering walk.
template <typename Neighbors>
std::vector<int> covering_bfs(int nodes, int n, const std::vector<Mask>& node_mask,
                              Neighbors&& neighbors) {
  const Mask full = (n == 64) ? ~Mask{0} : ((Mask{1} << n) - 1);
  const std::size_t width = std::size_t{1} << n;
  const std::size_t total = static_cast<std::size_t>(nodes) * width;
  if (total > (std::size_t{1} << 27)) {
    fail(ErrorKind::CapExceeded, "oracle state space too large: " + std::to_string(total));
  }
  constexpr std::int64_t kUnseen = -2;
  constexpr std::int64_t kRoot = -1;
  std::vector<std::int64_t> parent(total, kUnseen);
  std::vector<std::uint64_t> frontier, next;

  auto pack = [&](int node, Mask cov) {
    return static_cast<std::uint64_t>(node) * width + cov;
  };
  for (int s = 0; s < nodes; ++s) {
    auto st = pack(s, node_mask[s]);
    parent[st] = kRoot;
    frontier.push_back(st);
  }
  std::int64_t goal = -1;
  for (auto st : frontier) {
    if ((st % width) == full) {
      goal = static_cast<std::int64_t>(st);
      break;
    }
  }
  while (goal < 0 && !frontier.empty()) {
    next.clear();
    for (auto st : frontier) {
      int node = static_cast<int>(st / width);
      Mask cov = st % width;
      for (int to : neighbors(node)) {
        auto nst = pack(to, cov | node_mask[to]);
        if (parent[nst] != kUnseen) continue;
        parent[nst] = static_cast<std::int64_t>(st);
        if ((cov | node_mask[to]) == full) {
          goal = static_cast<std::int64_t>(nst);
          break;
        }
        next.push_back(nst);
      }
      if (goal >= 0) break;
    }
    frontier.swap(next);
  }
  if (goal < 0) fail(ErrorKind::Infeasible, "no covering walk exists");
  std::vector<int> seq;
  for (std::int64_t st = goal; st != kRoot; st = parent[st]) {
    seq.push_back(static_cast<int>(st / width));
  }
  std::reverse(seq.begin(), seq.end());
  return seq;
}

}  // namespace

OracleResult exact_hk(const Graph& g, int k, bool restricted, const Caps& caps) {
  if (g.n() > caps.oracle_max_n || g.n() > 24) {
    fail(ErrorKind::CapExceeded, "oracle refuses n = " + std::to_string(g.n()) +
                                     " (cap " + std::to_string(caps.oracle_max_n) + ")");
  }
  if (k > caps.oracle_max_k) {
    fail(ErrorKind::CapExceeded, "oracle refuses k = " + std::to_string(k) + " (cap " +
                                     std::to_string(caps.oracle_max_k) + ")");
  }
  if (k < 1 || k > g.n()) fail(ErrorKind::InvalidInput, "k out of range");
  if (!g.is_connected()) fail(ErrorKind::InvalidInput, "graph is disconnected");

  ConfigurationSpace space(g, k);
  std::vector<Mask> masks(space.size());
  for (int id = 0; id < space.size(); ++id) masks[id] = space.mask(id);

  std::vector<std::vector<int>> adj(space.size());
  for (int id = 0; id < space.size(); ++id) {
    for (int to : space.neighbors(id)) {
      if (!restricted || space.new_vertices(id, to) == 1) adj[id].push_back(to);
    }
  }
  auto seq = covering_bfs(space.size(), g.n(), masks,
                          [&](int id) -> const std::vector<int>& { return adj[id]; });

  OracleResult out;
  out.length = static_cast<int>(seq.size()) - 1;
  out.witness.k = k;
  auto first = space.set(seq[0]);
  out.witness.configs.emplace_back(first.begin(), first.end());
  for (std::size_t i = 1; i < seq.size(); ++i) {
    auto aligned = align_slots(g, out.witness.configs.back(), space.set(seq[i]));
    if (!aligned) fail(ErrorKind::InvariantViolation, "oracle produced a non-adjacent step");
    out.witness.configs.push_back(std::move(*aligned));
  }
  return out;
}

PackingSolution exact_set_packing(const PackingInstance& inst, const Caps& caps) {
  // Elements in two or more sets are the only ones that constrain a choice.
  std::unordered_map<Vertex, int> count;
  for (const auto& s : inst.sets) {
    for (Vertex v : s.members) ++count[v];
  }
  std::vector<Vertex> contested;
  for (auto [v, c] : count) {
    if (c >= 2) contested.push_back(v);
  }
  std::sort(contested.begin(), contested.end());
  const int c = static_cast<int>(contested.size());
  if (c > caps.exact_packing_max_elements || c > 62) {
    fail(ErrorKind::CapExceeded,
         "exact packing refuses " + std::to_string(c) + " shared elements (cap " +
             std::to_string(caps.exact_packing_max_elements) + ")");
  }
  auto bit = [&](Vertex v) -> int {
    auto it = std::lower_bound(contested.begin(), contested.end(), v);
    return (it != contested.end() && *it == v) ? static_cast<int>(it - contested.begin())
                                               : -1;
  };

  PackingSolution sol;
  std::vector<Mask> set_mask(inst.sets.size(), 0);
  // containing[b]: sets holding contested element b.
  std::vector<std::vector<int>> containing(c);
  for (std::size_t i = 0; i < inst.sets.size(); ++i) {
    for (Vertex v : inst.sets[i].members) {
      int b = bit(v);
      if (b >= 0) {
        set_mask[i] |= Mask{1} << b;
        containing[b].push_back(static_cast<int>(i));
      }
    }
    if (set_mask[i] == 0) {
      sol.chosen.push_back(static_cast<int>(i));
      sol.weight += inst.sets[i].weight;
    }
  }

  // best(closed) = optimum over sets avoiding `closed`, deciding elements in
  // increasing order: the lowest open element is either left uncovered or
  // covered by a set that lies entirely among open elements. Scores rank by
  // weight, then by fewer sets; fewer, larger sets leave fewer dummy-bearing
  // sets anchored on each other.
  constexpr long long kScale = 1 << 12;
  auto score = [&](int i) { return inst.sets[i].weight * kScale - 1; };
  const Mask all = c == 0 ? 0 : (c == 64 ? ~Mask{0} : (Mask{1} << c) - 1);
  std::unordered_map<Mask, long long> memo;
  auto best = [&](auto&& self, Mask closed) -> long long {
    if (closed == all) return 0;
    if (auto it = memo.find(closed); it != memo.end()) return it->second;
    int b = std::countr_one(closed);
    long long value = self(self, closed | (Mask{1} << b));
    for (int i : containing[b]) {
      if (set_mask[i] & closed) continue;
      value = std::max(value, score(i) + self(self, closed | set_mask[i]));
    }
    memo.emplace(closed, value);
    return value;
  };
  best(best, 0);

  int shared_weight = 0;
  Mask closed = 0;
  while (closed != all) {
    int b = std::countr_one(closed);
    long long here = best(best, closed);
    Mask skip = closed | (Mask{1} << b);
    if (best(best, skip) == here) {
      closed = skip;
      continue;
    }
    bool found = false;
    for (int i : containing[b]) {
      if (set_mask[i] & closed) continue;
      if (score(i) + best(best, closed | set_mask[i]) == here) {
        sol.chosen.push_back(i);
        shared_weight += inst.sets[i].weight;
        closed |= set_mask[i];
        found = true;
        break;
      }
    }
    if (!found) fail(ErrorKind::InvariantViolation, "packing reconstruction failed");
  }
  sol.weight += shared_weight;
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

CoverResult exact_connected_set_cover(const CscInstance& inst, const Caps& caps) {
  inst.validate();
  const int f = static_cast<int>(inst.family.size());
  if (f > caps.exact_csc_max_family || f > 30) {
    fail(ErrorKind::CapExceeded, "exact cover refuses a family of " + std::to_string(f) +
                                     " (cap " + std::to_string(caps.exact_csc_max_family) +
                                     ")");
  }
  if (inst.universe > 64) fail(ErrorKind::CapExceeded, "exact cover needs universe <= 64");
  const Mask full = inst.universe == 64 ? ~Mask{0} : (Mask{1} << inst.universe) - 1;
  std::vector<Mask> fm(f, 0);
  std::vector<std::uint32_t> hm(f, 0);
  for (int i = 0; i < f; ++i) {
    for (Vertex v : inst.family[i]) fm[i] |= Mask{1} << v;
    for (int j : inst.host[i]) hm[i] |= std::uint32_t{1} << j;
  }
  auto connected = [&](std::uint32_t sub) {
    std::uint32_t reach = sub & (~sub + 1);
    while (true) {
      std::uint32_t grow = reach;
      for (std::uint32_t r = reach; r; r &= r - 1) grow |= hm[std::countr_zero(r)] & sub;
      if (grow == reach) break;
      reach = grow;
    }
    return reach == sub;
  };
  for (int size = 1; size <= f; ++size) {
    // Gosper's hack over all subsets of this size.
    std::uint32_t sub = (std::uint32_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << f;
    while (sub < limit) {
      Mask cov = 0;
      for (std::uint32_t r = sub; r; r &= r - 1) cov |= fm[std::countr_zero(r)];
      if (cov == full && connected(sub)) {
        CoverResult out;
        for (std::uint32_t r = sub; r; r &= r - 1) out.chosen.push_back(std::countr_zero(r));
        return out;
      }
      std::uint32_t low = sub & (~sub + 1);
      std::uint32_t ripple = sub + low;
      if (ripple == 0) break;
      sub = (((ripple ^ sub) >> 2) / low) | ripple;
    }
  }
  fail(ErrorKind::Infeasible, "no connected cover exists");
}

HyperWalkResult exact_hyperedge_walk(const Hypergraph& h, const AugmentedLineGraph& lstar,
                                     const Caps& caps) {
  if (h.n() > caps.oracle_max_n || h.n() > 24) {
    fail(ErrorKind::CapExceeded, "oracle refuses n = " + std::to_string(h.n()));
  }
  std::vector<Mask> masks(h.m(), 0);
  for (int e = 0; e < h.m(); ++e) {
    for (Vertex v : h.hyperedge(e)) masks[e] |= Mask{1} << v;
  }
  auto seq = covering_bfs(h.m(), h.n(), masks,
                          [&](int e) -> const std::vector<int>& { return lstar.adj[e]; });
  return {static_cast<int>(seq.size()) - 1, std::move(seq)};
}

}  // namespace khwp
