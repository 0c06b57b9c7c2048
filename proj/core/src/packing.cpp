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

#include "khwp/packing.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "khwp/error.hpp"
#include "khwp/oracle.hpp"

namespace khwp {

std::string_view to_string(SetKind kind) {
  switch (kind) {
    case SetKind::I: return "I";
    case SetKind::II: return "II";
    case SetKind::III: return "III";
    case SetKind::IV: return "IV";
  }
  return "?";
}

PackingMode parse_packing_mode(std::string_view text) {
  if (text == "greedy") return PackingMode::Greedy;
  if (text == "local" || text == "local_search") return PackingMode::LocalSearch;
  if (text == "exact") return PackingMode::Exact;
  fail(ErrorKind::InvalidInput, "unknown packing mode: " + std::string(text));
}

PackingInstance build_sp_instance(const Graph& g) {
  PackingInstance inst;
  inst.n = g.n();
  inst.cycles = enumerate_c4(g);
  inst.grids = enumerate_grid_2x3(g);
  Vertex next_dummy = -1;
  auto add = [&](SetKind kind, int origin, std::vector<Vertex> real, int weight_full,
                 bool with_dummy_sets) {
    std::sort(real.begin(), real.end());
    inst.sets.push_back({kind, real, weight_full, origin, std::nullopt, std::nullopt});
    if (!with_dummy_sets) return;
    SetKind reduced = kind == SetKind::I ? SetKind::II : SetKind::IV;
    for (Vertex r : real) {
      std::vector<Vertex> members;
      Vertex dummy = next_dummy--;
      members.push_back(dummy);
      for (Vertex v : real) {
        if (v != r) members.push_back(v);
      }
      std::sort(members.begin(), members.end());
      inst.sets.push_back({reduced, std::move(members), weight_full - 1, origin, r, dummy});
    }
  };
  for (std::size_t c = 0; c < inst.cycles.size(); ++c) {
    const auto& cyc = inst.cycles[c];
    add(SetKind::I, static_cast<int>(c), {cyc.begin(), cyc.end()}, 4, true);
  }
  for (std::size_t d = 0; d < inst.grids.size(); ++d) {
    const auto& grid = inst.grids[d].v;
    add(SetKind::III, static_cast<int>(d), {grid.begin(), grid.end()}, 6, true);
  }
  inst.last_dummy = next_dummy + 1;
  return inst;
}

void check_disjoint(const PackingInstance& inst, const PackingSolution& sol) {
  std::unordered_map<Vertex, int> seen;
  int weight = 0;
  for (int i : sol.chosen) {
    if (i < 0 || i >= static_cast<int>(inst.sets.size())) {
      fail(ErrorKind::InvariantViolation, "packing refers to a missing set");
    }
    weight += inst.sets[i].weight;
    for (Vertex v : inst.sets[i].members) {
      auto [it, fresh] = seen.emplace(v, i);
      if (!fresh) {
        fail(ErrorKind::InvariantViolation, "sets " + std::to_string(it->second) + " and " +
                                                std::to_string(i) + " share element " +
                                                std::to_string(v));
      }
    }
  }
  if (weight != sol.weight) {
    fail(ErrorKind::InvariantViolation, "packing weight does not match its sets");
  }
}

namespace {

PackingSolution greedy_packing(const PackingInstance& inst) {
  std::vector<int> order(inst.sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = inst.sets[a];
    const auto& y = inst.sets[b];
    // weight/size descending, compared without division.
    long long lhs = static_cast<long long>(x.weight) * static_cast<long long>(y.members.size());
    long long rhs = static_cast<long long>(y.weight) * static_cast<long long>(x.members.size());
    if (lhs != rhs) return lhs > rhs;
    return x.weight > y.weight;
  });
  std::unordered_map<Vertex, char> used;
  PackingSolution sol;
  for (int i : order) {
    const auto& s = inst.sets[i];
    bool free = std::none_of(s.members.begin(), s.members.end(),
                             [&](Vertex v) { return used.count(v) != 0; });
    if (!free) continue;
    for (Vertex v : s.members) used[v] = 1;
    sol.chosen.push_back(i);
    sol.weight += s.weight;
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

bool disjoint(const PackingSet& a, const PackingSet& b) {
  std::size_t i = 0, j = 0;
  while (i < a.members.size() && j < b.members.size()) {
    if (a.members[i] == b.members[j]) return false;
    if (a.members[i] < b.members[j]) ++i; else ++j;
  }
  return true;
}

// Insert one or two sets at the cost of at most one chosen set, while the
// total weight grows, until nothing improves.
PackingSolution local_search(const PackingInstance& inst, PackingSolution sol) {
  const int total = static_cast<int>(inst.sets.size());
  while (true) {
    std::vector<char> chosen(total, 0);
    std::unordered_map<Vertex, int> owner;
    for (int c : sol.chosen) {
      chosen[c] = 1;
      for (Vertex v : inst.sets[c].members) owner[v] = c;
    }
    // Sets clashing with exactly one chosen set, grouped by that set.
    std::map<int, std::vector<int>> bucket;
    bool added_free = false;
    for (int s = 0; s < total; ++s) {
      if (chosen[s]) continue;
      std::vector<int> clash;
      for (Vertex v : inst.sets[s].members) {
        auto it = owner.find(v);
        if (it != owner.end() &&
            std::find(clash.begin(), clash.end(), it->second) == clash.end()) {
          clash.push_back(it->second);
        }
      }
      if (clash.empty()) {
        sol.chosen.push_back(s);
        sol.weight += inst.sets[s].weight;
        for (Vertex v : inst.sets[s].members) owner[v] = s;
        chosen[s] = 1;
        added_free = true;
      } else if (clash.size() == 1) {
        bucket[clash[0]].push_back(s);
      }
    }
    if (added_free) {
      std::sort(sol.chosen.begin(), sol.chosen.end());
      continue;
    }
    int best_gain = 0, drop = -1;
    std::vector<int> insert;
    for (const auto& [c, cands] : bucket) {
      const int w_c = inst.sets[c].weight;
      for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto& a = inst.sets[cands[i]];
        if (a.weight - w_c > best_gain) {
          best_gain = a.weight - w_c;
          drop = c;
          insert = {cands[i]};
        }
        for (std::size_t j = i + 1; j < cands.size(); ++j) {
          const auto& b = inst.sets[cands[j]];
          int gain = a.weight + b.weight - w_c;
          if (gain > best_gain && disjoint(a, b)) {
            best_gain = gain;
            drop = c;
            insert = {cands[i], cands[j]};
          }
        }
      }
    }
    if (drop < 0) break;
    sol.chosen.erase(std::find(sol.chosen.begin(), sol.chosen.end(), drop));
    sol.chosen.insert(sol.chosen.end(), insert.begin(), insert.end());
    sol.weight += best_gain;
    std::sort(sol.chosen.begin(), sol.chosen.end());
  }
  return sol;
}

}  // namespace

PackingSolution approx_set_packing(const PackingInstance& inst, PackingMode mode,
                                   const Caps& caps) {
  PackingSolution sol;
  switch (mode) {
    case PackingMode::Greedy: sol = greedy_packing(inst); break;
    case PackingMode::LocalSearch: sol = local_search(inst, greedy_packing(inst)); break;
    case PackingMode::Exact: sol = exact_set_packing(inst, caps); break;
  }
  check_disjoint(inst, sol);
  return sol;
}

int owner_of(const PackingInstance& inst, const PackingSolution& sol, Vertex v) {
  for (int i : sol.chosen) {
    const auto& m = inst.sets[i].members;
    if (std::binary_search(m.begin(), m.end(), v)) return i;
  }
  // Nobody holds v for real: the first reduced set standing in for it keeps
  // it inside its own gadget.
  for (int i : sol.chosen) {
    if (inst.sets[i].replaced == v) return i;
  }
  return -1;
}

PackingSolution normalize_anchors(const PackingInstance& inst, PackingSolution sol) {
  while (true) {
    const int c = static_cast<int>(sol.chosen.size());
    // anchor[i]: position in sol.chosen of the set holding chosen[i]'s
    // replaced vertex, or -1.
    std::vector<int> anchor(c, -1);
    for (int i = 0; i < c; ++i) {
      const auto& s = inst.sets[sol.chosen[i]];
      if (!s.replaced) continue;
      int owner = owner_of(inst, sol, *s.replaced);
      if (owner >= 0 && owner != sol.chosen[i]) {
        anchor[i] = static_cast<int>(
            std::find(sol.chosen.begin(), sol.chosen.end(), owner) - sol.chosen.begin());
      }
    }
    std::vector<int> state(c, 0);  // 0 new, 1 on current chain, 2 done
    std::vector<int> cycle;
    for (int start = 0; start < c && cycle.empty(); ++start) {
      std::vector<int> chain;
      int x = start;
      while (x >= 0 && state[x] == 0) {
        state[x] = 1;
        chain.push_back(x);
        x = anchor[x];
      }
      if (x >= 0 && state[x] == 1) {
        auto from = std::find(chain.begin(), chain.end(), x);
        cycle.assign(from, chain.end());
      }
      for (int y : chain) state[y] = 2;
    }
    if (cycle.empty()) return sol;
    int victim = cycle[0];
    for (int i : cycle) {
      const auto& a = inst.sets[sol.chosen[i]];
      const auto& b = inst.sets[sol.chosen[victim]];
      if (a.weight < b.weight ||
          (a.weight == b.weight && sol.chosen[i] < sol.chosen[victim])) {
        victim = i;
      }
    }
    sol.weight -= inst.sets[sol.chosen[victim]].weight;
    sol.chosen.erase(sol.chosen.begin() + victim);
  }
}

}  // namespace khwp
