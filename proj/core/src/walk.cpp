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

#include "khwp/walk.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "khwp/error.hpp"
#include "khwp/patterns.hpp"

namespace khwp {

namespace {

std::string join(std::span<const Vertex> vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(vs[i]);
  }
  return s;
}

bool can_move(const Graph& g, Vertex a, Vertex b) { return a == b || g.has_edge(a, b); }

// Kuhn's augmenting path on the "stay or step" relation; k is tiny.
bool augment(const Graph& g, std::span<const Vertex> from, std::span<const Vertex> to,
             int i, std::vector<int>& match_to, std::vector<char>& seen) {
  // Free targets first, so an agent that already holds its vertex is only
  // displaced when nothing else works.
  for (std::size_t j = 0; j < to.size(); ++j) {
    if (!seen[j] && match_to[j] < 0 && can_move(g, from[i], to[j])) {
      seen[j] = 1;
      match_to[j] = i;
      return true;
    }
  }
  for (std::size_t j = 0; j < to.size(); ++j) {
    if (seen[j] || !can_move(g, from[i], to[j])) continue;
    seen[j] = 1;
    if (match_to[j] < 0 || augment(g, from, to, match_to[j], match_to, seen)) {
      match_to[j] = i;
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Violation> validate_configuration(const Graph& g,
                                                std::span<const Vertex> c) {
  if (c.empty()) {
    return Violation{ViolationKind::WrongArity, 0, {}, "empty configuration"};
  }
  for (Vertex v : c) {
    if (v < 0 || v >= g.n()) {
      return Violation{ViolationKind::OutOfRange, 0, {v},
                       "vertex " + std::to_string(v) + " out of range"};
    }
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      if (c[i] == c[j]) {
        return Violation{ViolationKind::RepeatedVertex, 0, {c[i]},
                         "agents " + std::to_string(i) + " and " + std::to_string(j) +
                             " share vertex " + std::to_string(c[i])};
      }
    }
  }
  if (!induces_connected(g, c)) {
    return Violation{ViolationKind::Disconnected, 0,
                     std::vector<Vertex>(c.begin(), c.end()),
                     "induced subgraph on {" + join(c) + "} is disconnected"};
  }
  return std::nullopt;
}

std::optional<int> classify_transition(const Graph& g, std::span<const Vertex> c,
                                       std::span<const Vertex> c2) {
  if (c.size() != c2.size()) {
    fail(ErrorKind::InvalidInput, "configurations have different agent counts");
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!can_move(g, c[i], c2[i])) return std::nullopt;
  }
  int r = 0;
  for (Vertex v : c2) {
    if (std::find(c.begin(), c.end(), v) == c.end()) ++r;
  }
  return r;
}

WalkReport validate_walk(const Graph& g, const TransitionWalk& w) {
  WalkReport report;
  report.length = w.length();
  report.histogram.assign(std::max(w.k, 0) + 1, 0);
  if (w.configs.empty()) {
    report.violation = Violation{ViolationKind::EmptyWalk, 0, {}, "walk is empty"};
    return report;
  }
  std::vector<char> seen(g.n(), 0);
  for (std::size_t t = 0; t < w.configs.size(); ++t) {
    const auto& c = w.configs[t];
    if (static_cast<int>(c.size()) != w.k) {
      report.violation = Violation{ViolationKind::WrongArity, static_cast<int>(t), {},
                                   "configuration " + std::to_string(t) + " has " +
                                       std::to_string(c.size()) + " slots, expected " +
                                       std::to_string(w.k)};
      break;
    }
    if (auto v = validate_configuration(g, c)) {
      v->step = static_cast<int>(t);
      v->message = "configuration " + std::to_string(t) + ": " + v->message;
      report.violation = std::move(v);
      break;
    }
    for (Vertex v : c) seen[v] = 1;
    if (t > 0) {
      auto r = classify_transition(g, w.configs[t - 1], c);
      if (!r) {
        report.violation =
            Violation{ViolationKind::NotAdjacent, static_cast<int>(t), c,
                      "configurations " + std::to_string(t - 1) + " and " +
                          std::to_string(t) + " are not adjacent"};
        break;
      }
      ++report.histogram[*r];
    }
  }
  report.spanning = std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; });
  return report;
}

std::optional<Configuration> align_slots(const Graph& g, std::span<const Vertex> from,
                                         std::span<const Vertex> to) {
  if (from.size() != to.size()) return std::nullopt;
  std::vector<int> match_to(to.size(), -1);
  // Prefer keeping stationary agents in place so later alignments stay cheap.
  for (std::size_t i = 0; i < from.size(); ++i) {
    for (std::size_t j = 0; j < to.size(); ++j) {
      if (from[i] == to[j]) match_to[j] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (std::find(match_to.begin(), match_to.end(), static_cast<int>(i)) !=
        match_to.end()) {
      continue;
    }
    std::vector<char> seen(to.size(), 0);
    if (!augment(g, from, to, static_cast<int>(i), match_to, seen)) return std::nullopt;
  }
  Configuration out(from.size());
  for (std::size_t j = 0; j < to.size(); ++j) out[match_to[j]] = to[j];
  return out;
}

TransitionWalk drop_zero_transitions(const Graph& g, const TransitionWalk& w) {
  TransitionWalk out{w.k, {}};
  for (const auto& c : w.configs) {
    if (out.configs.empty()) {
      out.configs.push_back(c);
      continue;
    }
    const auto& last = out.configs.back();
    auto a = last, b = c;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) continue;
    auto aligned = align_slots(g, last, c);
    if (!aligned) {
      fail(ErrorKind::InvariantViolation,
           "configurations {" + join(last) + "} and {" + join(c) + "} are not adjacent");
    }
    out.configs.push_back(std::move(*aligned));
  }
  return out;
}

std::vector<Vertex> two_to_one(const Graph& g, const TransitionWalk& w2) {
  if (w2.k != 2 || w2.configs.empty()) {
    fail(ErrorKind::InvalidInput, "two_to_one needs a nonempty 2-agent walk");
  }
  std::vector<char> seen(g.n(), 0);
  std::vector<Vertex> out{w2.configs[0][0], w2.configs[0][1]};
  seen[out[0]] = seen[out[1]] = 1;
  // Invariant: the agent stands on a vertex of the current configuration.
  for (std::size_t t = 1; t < w2.configs.size(); ++t) {
    const auto& prev = w2.configs[t - 1];
    const auto& cur = w2.configs[t];
    Vertex x = out.back();
    int slot = (x == prev[0]) ? 0 : 1;
    Vertex first = x, other = cur[0] == x ? cur[1] : cur[0];
    if (cur[0] != x && cur[1] != x) {
      // The agent at x moved to cur[slot] along an edge.
      first = cur[slot];
      other = cur[1 - slot];
      out.push_back(first);
      seen[first] = 1;
    }
    if (!seen[other]) {
      out.push_back(other);
      seen[other] = 1;
    }
  }
  return out;
}

TransitionWalk one_to_two(const Graph& g, std::span<const Vertex> w1) {
  std::vector<Vertex> steps;
  for (Vertex v : w1) {
    if (steps.empty() || steps.back() != v) steps.push_back(v);
  }
  if (steps.size() < 2) {
    fail(ErrorKind::InvalidInput, "one_to_two needs a walk with at least one step");
  }
  TransitionWalk out{2, {}};
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (!g.has_edge(steps[i], steps[i + 1])) {
      fail(ErrorKind::InvalidInput, "walk uses a missing edge " +
                                        std::to_string(steps[i]) + " " +
                                        std::to_string(steps[i + 1]));
    }
    out.configs.push_back({steps[i], steps[i + 1]});
  }
  return out;
}

TransitionWalk as_walk(std::span<const Vertex> w1) {
  TransitionWalk out{1, {}};
  for (Vertex v : w1) out.configs.push_back({v});
  return out;
}

int d_P_k(const Graph& tree, std::span<const Vertex> path, int k, Edge e) {
  if (!tree.has_edge(e.u, e.v)) {
    fail(ErrorKind::InvalidInput, "not a tree edge: " + std::to_string(e.u) + " " +
                                      std::to_string(e.v));
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if ((path[i] == e.u && path[i + 1] == e.v) || (path[i] == e.v && path[i + 1] == e.u)) {
      return 0;
    }
  }
  auto to_path = bfs_distances(tree, path);
  Vertex near = to_path[e.u] <= to_path[e.v] ? e.u : e.v;
  Vertex far = near == e.u ? e.v : e.u;
  // Depth of the far side, measured from `near`.
  std::vector<int> depth(tree.n(), -1);
  depth[near] = 0;
  depth[far] = 1;
  std::vector<Vertex> stack{far};
  int deepest = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : tree.neighbors(x)) {
      if (depth[y] < 0) {
        depth[y] = depth[x] + 1;
        deepest = std::max(deepest, depth[y]);
        stack.push_back(y);
      }
    }
  }
  return deepest >= k ? 1 : 0;
}

int rhwp_lower_bound(const Graph& tree, int k) {
  if (k < 1 || k > tree.n()) fail(ErrorKind::InvalidInput, "k out of range");
  auto diam = tree_diameter(tree);
  int total = tree.n() - k;
  for (Edge e : tree.edges()) total += d_P_k(tree, diam.path, k, e);
  return total;
}

void write_walk(std::ostream& out, const Graph& g, const TransitionWalk& w) {
  auto report = validate_walk(g, w);
  out << "k " << w.k << " length " << w.length() << " spanning "
      << (report.spanning ? 1 : 0) << '\n';
  for (std::size_t t = 0; t < w.configs.size(); ++t) {
    out << t << ": " << join(w.configs[t]) << '\n';
  }
}

TransitionWalk read_walk(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  TransitionWalk w;
  bool header = false;
  int declared = -1;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!header) {
      std::string kw_k, kw_len, kw_span;
      int spanning = 0;
      if (!(ls >> kw_k >> w.k >> kw_len >> declared >> kw_span >> spanning) ||
          kw_k != "k" || kw_len != "length" || kw_span != "spanning" || w.k < 1) {
        fail(ErrorKind::InvalidInput, "bad walk header: " + line);
      }
      header = true;
      continue;
    }
    std::string label;
    ls >> label;
    if (label.empty() || label.back() != ':') {
      fail(ErrorKind::InvalidInput, "bad walk line: " + line);
    }
    Configuration c;
    long long v;
    while (ls >> v) c.push_back(static_cast<Vertex>(v));
    if (!ls.eof()) fail(ErrorKind::InvalidInput, "bad walk line: " + line);
    w.configs.push_back(std::move(c));
  }
  if (!header) fail(ErrorKind::InvalidInput, "missing walk header");
  if (declared != w.length()) {
    fail(ErrorKind::InvalidInput, "header length " + std::to_string(declared) +
                                      " does not match " +
                                      std::to_string(w.length()) + " transitions");
  }
  return w;
}

TransitionWalk read_walk_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return read_walk(ss.str());
}

}  // namespace khwp
