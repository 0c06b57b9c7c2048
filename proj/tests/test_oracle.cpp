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

#include "khwp/config_space.hpp"
#include "khwp/error.hpp"
#include "khwp/generate.hpp"
#include "khwp/oracle.hpp"
#include "khwp/packing.hpp"
#include "support.hpp"

using namespace khwp;
using namespace khwp::testing;

TEST(ConfigSpace, MatchesConnectedSubsets) {
  Rng rng(8);
  for (int i = 0; i < 10; ++i) {
    auto g = random_connected_graph(7, 0.4, rng);
    for (int k = 1; k <= 3; ++k) {
      ConfigurationSpace cs(g, k);
      EXPECT_EQ(cs.size(), static_cast<int>(bf_connected_subsets(g, k).size()));
      for (int id = 0; id < cs.size(); ++id) {
        EXPECT_EQ(cs.find(cs.set(id)), id);
        for (int nb : cs.neighbors(id)) {
          EXPECT_NE(nb, id);
          EXPECT_TRUE(classify_transition(g, cs.set(id), cs.set(nb)).has_value() ||
                      k > 1);  // adjacency is up to agent relabelling
        }
      }
    }
  }
}

TEST(ExactHk, SmallExamples) {
  EXPECT_EQ(exact_hk(complete_graph(4), 2).length, 1);
  EXPECT_EQ(exact_hk(path_graph(4), 2).length, 2);
  EXPECT_EQ(exact_hk(star_graph(3), 1).length, 4);
  auto r = exact_hk(path_graph(4), 2);
  EXPECT_TRUE(validate_walk(path_graph(4), r.witness).ok());
  EXPECT_EQ(r.witness.length(), r.length);
}

TEST(ExactHk, AgreesWithOrderedTupleSearch) {
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    auto g = random_connected_graph(3 + i % 4, 0.5, rng);
    for (int k = 1; k <= std::min(3, g.n()); ++k) {
      auto r = exact_hk(g, k);
      EXPECT_EQ(r.length, bf_hk(g, k)) << "n=" << g.n() << " k=" << k;
      EXPECT_TRUE(validate_walk(g, r.witness).ok());
    }
  }
}

TEST(ExactHk, TreesSingleAgentFormula) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& t : all_trees(n))
      EXPECT_EQ(exact_hk(t, 1).length, 2 * (n - 1) - bf_tree_diameter(t));
}

TEST(ExactHk, RestrictedEqualsUnrestrictedOnSmallTreesForKUpTo3) {
  for (int n = 3; n <= 8; ++n)
    for (const auto& t : all_trees(n))
      for (int k = 2; k <= 3; ++k) EXPECT_EQ(exact_hk(t, k).length, exact_hk(t, k, true).length);
}

TEST(ExactHk, AddingAnEdgeNeverHurts) {
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    auto g = random_connected_graph(7, 0.3, rng);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v)
        if (!g.has_edge(u, v)) {
          auto more = edges;
          more.push_back({u, v});
          auto g2 = Graph::from_edges(g.n(), more);
          EXPECT_LE(exact_hk(g2, 2).length, exact_hk(g, 2).length);
          goto next;
        }
  next:;
  }
}

TEST(ExactHk, Caps) {
  Caps caps;
  caps.oracle_max_n = 6;
  EXPECT_THROW(exact_hk(path_graph(7), 2, false, caps), Error);
  try {
    exact_hk(path_graph(7), 2, false, caps);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
  EXPECT_THROW(exact_hk(path_graph(8), 5), Error);
  EXPECT_THROW(exact_hk(path_graph(3), 4), Error);
}

TEST(ExactPacking, Examples) {
  PackingInstance empty;
  EXPECT_EQ(exact_set_packing(empty).weight, 0);
  auto c4 = build_sp_instance(cycle_graph(4));
  auto sol = exact_set_packing(c4);
  EXPECT_EQ(sol.weight, 4);
  ASSERT_EQ(sol.chosen.size(), 1u);
  EXPECT_EQ(c4.sets[sol.chosen[0]].kind, SetKind::I);
  // Two squares glued at vertex 3.
  auto bowtie = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  auto inst = build_sp_instance(bowtie);
  auto best = exact_set_packing(inst);
  EXPECT_EQ(best.weight, bf_set_packing(inst));
  EXPECT_EQ(best.weight, 7);
  check_disjoint(inst, best);
}

TEST(ExactPacking, MatchesBranching) {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    auto g = random_connected_graph(6, 0.5, rng);
    auto inst = build_sp_instance(g);
    if (inst.sets.size() > 22) continue;
    EXPECT_EQ(exact_set_packing(inst).weight, bf_set_packing(inst));
  }
}

TEST(ExactCover, Examples) {
  CscInstance whole{3, {{0, 1, 2}}, {{}}};
  EXPECT_EQ(exact_connected_set_cover(whole).chosen, std::vector<int>{0});
  CscInstance split{4, {{0, 1}, {2, 3}}, {{}, {}}};
  try {
    exact_connected_set_cover(split);
    ADD_FAILURE() << "expected infeasible";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Infeasible);
  }
  CscInstance chain{4, {{0, 1}, {1, 2}, {2, 3}}, {{1}, {0, 2}, {1}}};
  EXPECT_EQ(exact_connected_set_cover(chain).chosen.size(), 3u);
}
