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

#include "khwp/config_space.hpp"

#include <algorithm>

#include "khwp/patterns.hpp"

namespace khwp {

std::size_t ConfigurationSpace::Hash::operator()(
    const std::vector<Vertex>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Vertex x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

ConfigurationSpace::ConfigurationSpace(const Graph& g, int k) : k_(k) {
  sets_ = enumerate_connected_ksubsets(g, k);
  masks_.reserve(sets_.size());
  for (int id = 0; id < size(); ++id) {
    index_.emplace(sets_[id], id);
    std::uint64_t m = 0;
    if (g.n() <= 64) {
      for (Vertex v : sets_[id]) m |= std::uint64_t{1} << v;
    }
    masks_.push_back(m);
  }

  adj_.assign(sets_.size(), {});
  std::vector<Vertex> pick(k);
  std::vector<char> used(g.n(), 0);
  for (int id = 0; id < size(); ++id) {
    const auto& from = sets_[id];
    auto& out = adj_[id];
    // Each slot stays or steps to a neighbour; targets must be distinct.
    auto rec = [&](auto&& self, int slot) -> void {
      if (slot == k) {
        auto sorted = pick;
        std::sort(sorted.begin(), sorted.end());
        if (sorted == from) return;
        auto it = index_.find(sorted);
        if (it != index_.end()) out.push_back(it->second);
        return;
      }
      auto try_vertex = [&](Vertex v) {
        if (used[v]) return;
        used[v] = 1;
        pick[slot] = v;
        self(self, slot + 1);
        used[v] = 0;
      };
      try_vertex(from[slot]);
      for (Vertex v : g.neighbors(from[slot])) try_vertex(v);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
}

int ConfigurationSpace::new_vertices(int from, int to) const {
  const auto& a = sets_[from];
  const auto& b = sets_[to];
  int r = 0;
  for (Vertex v : b) {
    if (!std::binary_search(a.begin(), a.end(), v)) ++r;
  }
  return r;
}

int ConfigurationSpace::find(std::span<const Vertex> sorted) const {
  auto it = index_.find(std::vector<Vertex>(sorted.begin(), sorted.end()));
  return it == index_.end() ? -1 : it->second;
}

}  // namespace khwp
