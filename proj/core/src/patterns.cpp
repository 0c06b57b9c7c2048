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

#include "khwp/patterns.hpp"

#include <algorithm>
#include <set>

namespace khwp {

std::array<std::array<Vertex, 6>, 4> GridPattern::relabelings() const {
  const auto& a = v;
  return {{
      {a[0], a[1], a[2], a[3], a[4], a[5]},
      {a[1], a[0], a[3], a[2], a[5], a[4]},
      {a[4], a[5], a[2], a[3], a[0], a[1]},
      {a[5], a[4], a[3], a[2], a[1], a[0]},
  }};
}

GridPattern GridPattern::canonical() const {
  auto all = relabelings();
  return GridPattern{*std::min_element(all.begin(), all.end())};
}

bool GridPattern::embeds_in(const Graph& g) const {
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (v[i] == v[j]) return false;
    }
  }
  return std::all_of(kEdges.begin(), kEdges.end(),
                     [&](const auto& e) { return g.has_edge(v[e[0]], v[e[1]]); });
}

std::vector<Cycle4> enumerate_c4(const Graph& g) {
  std::vector<Cycle4> out;
  for (Vertex a = 0; a < g.n(); ++a) {
    for (Vertex b : g.neighbors(a)) {
      if (b < a) continue;
      for (Vertex c : g.neighbors(b)) {
        if (c <= a) continue;
        for (Vertex d : g.neighbors(c)) {
          if (d <= b || d == c || !g.has_edge(d, a)) continue;
          out.push_back({a, b, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GridPattern> enumerate_grid_2x3(const Graph& g) {
  std::set<GridPattern> found;
  // Fix the middle rung (v3, v2), then grow one square above and one below.
  for (Vertex x = 0; x < g.n(); ++x) {
    for (Vertex y : g.neighbors(x)) {
      for (Vertex top_l : g.neighbors(x)) {
        if (top_l == y) continue;
        for (Vertex top_r : g.neighbors(top_l)) {
          if (top_r == x || top_r == y || !g.has_edge(top_r, y)) continue;
          for (Vertex bot_l : g.neighbors(x)) {
            if (bot_l == y || bot_l == top_l || bot_l == top_r) continue;
            for (Vertex bot_r : g.neighbors(bot_l)) {
              if (bot_r == x || bot_r == y || bot_r == top_l || bot_r == top_r) {
                continue;
              }
              if (!g.has_edge(bot_r, y)) continue;
              found.insert(GridPattern{{top_l, top_r, y, x, bot_l, bot_r}}.canonical());
            }
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

namespace {

// ESU enumeration: each connected set is produced once, from its smallest
// vertex, by only extending with larger vertices that are exclusive
// neighbours of the newest member.
void esu_extend(const Graph& g, int k, Vertex root, std::vector<Vertex>& current,
                std::vector<Vertex> extension, std::vector<char>& in_nbhd,
                std::vector<std::vector<Vertex>>& out) {
  if (static_cast<int>(current.size()) == k) {
    auto sorted = current;
    std::sort(sorted.begin(), sorted.end());
    out.push_back(std::move(sorted));
    return;
  }
  while (!extension.empty()) {
    Vertex w = extension.back();
    extension.pop_back();
    auto next = extension;
    std::vector<Vertex> marked;
    for (Vertex u : g.neighbors(w)) {
      if (u > root && !in_nbhd[u]) {
        in_nbhd[u] = 1;
        marked.push_back(u);
        next.push_back(u);
      }
    }
    current.push_back(w);
    esu_extend(g, k, root, current, std::move(next), in_nbhd, out);
    current.pop_back();
    for (Vertex u : marked) in_nbhd[u] = 0;
  }
}

}  // namespace

std::vector<std::vector<Vertex>> enumerate_connected_ksubsets(const Graph& g, int k) {
  std::vector<std::vector<Vertex>> out;
  if (k < 1 || k > g.n()) return out;
  std::vector<char> in_nbhd(g.n(), 0);
  for (Vertex root = 0; root < g.n(); ++root) {
    // in_nbhd marks the root, current members and everything adjacent to them.
    std::vector<Vertex> marked{root};
    in_nbhd[root] = 1;
    std::vector<Vertex> extension;
    for (Vertex u : g.neighbors(root)) {
      if (u > root) {
        in_nbhd[u] = 1;
        marked.push_back(u);
        extension.push_back(u);
      }
    }
    std::vector<Vertex> current{root};
    esu_extend(g, k, root, current, std::move(extension), in_nbhd, out);
    for (Vertex u : marked) in_nbhd[u] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool induces_connected(const Graph& g, std::span<const Vertex> vertices) {
  if (vertices.empty()) return false;
  std::vector<Vertex> members(vertices.begin(), vertices.end());
  std::vector<char> seen(members.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (!seen[j] && g.has_edge(members[i], members[j])) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == members.size();
}

}  // namespace khwp
