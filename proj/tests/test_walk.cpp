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

#include <gtest/gtest.h>

#include <sstream>

#include "golden_tree.hpp"
#include "khwp/error.hpp"
#include "khwp/generate.hpp"
#include "khwp/oracle.hpp"
#include "khwp/walk.hpp"
#include "support.hpp"

using namespace khwp;
using namespace khwp::testing;

namespace {

TransitionWalk walk_of(int k, std::vector<Configuration> cs) { return TransitionWalk{k, std::move(cs)}; }

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Configuration, Validation) {
  auto p3 = path_graph(3);
  std::vector<Vertex> ok{0, 1}, gap{0, 2}, dup{1, 1}, far{0, 7};
  EXPECT_FALSE(validate_configuration(p3, ok));
  auto v = validate_configuration(p3, gap);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, ViolationKind::Disconnected);
  EXPECT_EQ(validate_configuration(p3, dup)->kind, ViolationKind::RepeatedVertex);
  EXPECT_EQ(validate_configuration(p3, far)->kind, ViolationKind::OutOfRange);
  auto tree18 = load_graph_file(fixture("tree18.txt"));
  std::vector<Vertex> c0{1, 2, 3, 4};
  EXPECT_FALSE(validate_configuration(tree18, c0));
}

TEST(Transition, Classification) {
  auto k4 = complete_graph(4);
  std::vector<Vertex> a{0, 1}, b{2, 3}, c{1, 2};
  EXPECT_EQ(classify_transition(k4, a, a), 0);
  EXPECT_EQ(classify_transition(k4, a, b), 2);
  EXPECT_EQ(classify_transition(k4, a, c), 1);
  auto p4 = path_graph(4);
  std::vector<Vertex> x{0, 1}, y{2, 3};
  EXPECT_FALSE(classify_transition(p4, x, y));
  std::vector<Vertex> three{0, 1, 2};
  EXPECT_THROW(classify_transition(p4, x, three), Error);
}

TEST(Transition, TwoTransitionExample) {
  // Slots (v1..v4) -> (v5, v2, v4, v6) on a host holding the moves v1-v5,
  // v3-v4, v4-v6.
  auto g = make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {3, 5}, {1, 3}, {1, 4}});
  std::vector<Vertex> c{0, 1, 2, 3}, c2{4, 1, 3, 5};
  EXPECT_EQ(classify_transition(g, c, c2), 2);
}

TEST(Walk, Tree18ConfigurationsSpan) {
  auto tree18 = load_graph_file(fixture("tree18.txt"));
  // Sets alone are unordered; align slots the way an agent assignment would.
  TransitionWalk w{4, {kTree18Configs[0]}};
  for (std::size_t i = 1; i < kTree18Configs.size(); ++i) {
    auto next = align_slots(tree18, w.configs.back(), kTree18Configs[i]);
    ASSERT_TRUE(next) << "step " << i;
    w.configs.push_back(*next);
  }
  auto rep = validate_walk(tree18, w);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.length, 15);
  EXPECT_EQ(rep.histogram.at(1), 15);
}

TEST(Walk, SmallReports) {
  auto k3 = complete_graph(3);
  auto r = validate_walk(k3, walk_of(3, {{0, 1, 2}}));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.length, 0);
  auto p4 = path_graph(4);
  auto r2 = validate_walk(p4, walk_of(2, {{0, 1}, {1, 2}}));
  EXPECT_TRUE(r2.valid());
  EXPECT_FALSE(r2.spanning);
  EXPECT_EQ(r2.length, 1);
  auto r3 = validate_walk(p4, walk_of(2, {{0, 1}, {2, 3}}));
  ASSERT_FALSE(r3.valid());
  EXPECT_EQ(r3.violation->kind, ViolationKind::NotAdjacent);
  EXPECT_EQ(r3.violation->step, 1);
  EXPECT_EQ(validate_walk(p4, walk_of(2, {})).violation->kind, ViolationKind::EmptyWalk);
  EXPECT_EQ(validate_walk(p4, walk_of(2, {{0, 1, 2}})).violation->kind, ViolationKind::WrongArity);
}

TEST(Walk, AgentsMaySwap) {
  auto k2 = path_graph(2);
  EXPECT_EQ(classify_transition(k2, std::vector<Vertex>{0, 1}, std::vector<Vertex>{1, 0}), 0);
}

TEST(Conversions, OneToTwo) {
  auto p3 = path_graph(3);
  std::vector<Vertex> w1{0, 1, 2};
  auto w2 = one_to_two(p3, w1);
  EXPECT_EQ(w2.configs, (std::vector<Configuration>{{0, 1}, {1, 2}}));
  auto tree18 = load_graph_file(fixture("tree18.txt"));
  auto f2 = one_to_two(tree18, kTree18Walk);
  auto rep = validate_walk(tree18, f2);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.length, 25);
  std::vector<Vertex> lone{0};
  EXPECT_THROW(one_to_two(p3, lone), Error);
}

TEST(Conversions, TwoToOne) {
  auto k2 = path_graph(2);
  auto single = two_to_one(k2, walk_of(2, {{0, 1}}));
  EXPECT_EQ(single, (std::vector<Vertex>{0, 1}));
  auto p4 = path_graph(4);
  auto w = two_to_one(p4, walk_of(2, {{0, 1}, {1, 2}, {2, 3}}));
  auto rep = validate_walk(p4, as_walk(w));
  EXPECT_TRUE(rep.ok());
  EXPECT_LE(rep.length, 7);
}

TEST(Conversions, TwoToOneOnOracleWalks) {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    auto g = random_connected_graph(3 + i % 6, 0.45, rng);
    auto opt = exact_hk(g, 2);
    auto w1 = two_to_one(g, opt.witness);
    auto rep = validate_walk(g, as_walk(w1));
    ASSERT_TRUE(rep.ok());
    EXPECT_LE(rep.length, 2 * opt.length + 1);
  }
}

TEST(Conversions, DropZeroTransitions) {
  auto p4 = path_graph(4);
  auto w = drop_zero_transitions(p4, walk_of(2, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}}));
  auto rep = validate_walk(p4, w);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.length, 2);
  EXPECT_EQ(rep.histogram.at(0), 0);
}

TEST(TreeQuantities, DpkOnTree18) {
  auto tree18 = load_graph_file(fixture("tree18.txt"));
  auto path = tree_diameter(tree18).path;
  int ones = 0;
  for (auto e : tree18.edges()) {
    const int d = d_P_k(tree18, path, 4, e);
    if (Edge{5, 10} == e) {
      EXPECT_EQ(d, 1);
    } else {
      EXPECT_EQ(d, 0) << e.u << "-" << e.v;
    }
    ones += d;
  }
  EXPECT_EQ(ones, 1);
  EXPECT_EQ(rhwp_lower_bound(tree18, 4), 15);
  EXPECT_THROW(d_P_k(tree18, path, 4, Edge{0, 1}), Error);
}

TEST(TreeQuantities, PathsAndMonotonicity) {
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(rhwp_lower_bound(path_graph(n), k), n - k);
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    auto t = random_tree(4 + i % 12, rng);
    auto path = tree_diameter(t).path;
    for (auto e : t.edges())
      for (int k = 1; k < 6; ++k) EXPECT_GE(d_P_k(t, path, k, e), d_P_k(t, path, k + 1, e));
  }
}

TEST(WalkIo, RoundTrip) {
  auto p4 = path_graph(4);
  auto w = walk_of(2, {{0, 1}, {1, 2}, {2, 3}});
  std::ostringstream out;
  write_walk(out, p4, w);
  EXPECT_EQ(out.str(), "k 2 length 2 spanning 1\n0: 0 1\n1: 1 2\n2: 2 3\n");
  auto back = read_walk(out.str());
  EXPECT_EQ(back.k, 2);
  EXPECT_EQ(back.configs, w.configs);
  EXPECT_THROW(read_walk("k 2 length 5 spanning 1\n0: 0 1\n"), Error);
}

TEST(Alignment, PrefersStationaryAgents) {
  auto g = complete_graph(4);
  std::vector<Vertex> from{0, 1}, to{1, 2};
  auto aligned = align_slots(g, from, to);
  ASSERT_TRUE(aligned);
  EXPECT_EQ((*aligned)[1], 1);
  EXPECT_EQ(sorted(*aligned), to);
}
