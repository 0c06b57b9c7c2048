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

#include <random>
#include <sstream>

#include "khwp/error.hpp"
#include "khwp/generate.hpp"
#include "khwp/graph.hpp"
#include "khwp/patterns.hpp"
#include "support.hpp"

using namespace khwp;
using namespace khwp::testing;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return make_graph(10, e);
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(0);
}

}  // namespace

TEST(LoadGraph, PathAndComplete) {
  auto p3 = load_graph("3 2\n0 1\n1 2\n");
  EXPECT_EQ(p3.n(), 3);
  EXPECT_EQ(p3.m(), 2);
  EXPECT_TRUE(p3.is_tree());
  auto k4 = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  EXPECT_EQ(k4.m(), 6);
  EXPECT_EQ(k4.max_degree(), 3);
}

TEST(LoadGraph, Rejections) {
  EXPECT_EQ(kind_of([] { load_graph("4 3\n0 1\n1 2\n0 2\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("2 1\n0 0\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("2 2\n0 1\n1 0\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("2 1\n0 5\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("3 2\n0 1\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_graph("x y\n"); }), ErrorKind::InvalidInput);
}

TEST(LoadGraph, CommentsAndRoundTrip) {
  auto g = load_graph("# a comment\n3 2\n# another\n0 1\n1 2\n");
  std::ostringstream out;
  write_graph(out, g);
  auto again = load_graph(out.str());
  EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), again.edges().begin(),
                         again.edges().end()));
}

TEST(LoadHypergraph, Basics) {
  auto h = load_hypergraph_file(fixture("hyper9.txt"));
  EXPECT_EQ(h.n(), 9);
  EXPECT_EQ(h.m(), 8);
  EXPECT_EQ(h.k(), 3);
  EXPECT_TRUE(h.is_connected());
  EXPECT_EQ(kind_of([] { load_hypergraph("3 1 2\n0 0\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_hypergraph("3 2 2\n0 1\n1 0\n"); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { load_hypergraph("3 1 3\n0 1\n"); }), ErrorKind::InvalidInput);
}

TEST(TreeDiameter, SmallCases) {
  EXPECT_EQ(tree_diameter(path_graph(5)).length, 4);
  EXPECT_EQ(tree_diameter(star_graph(3)).length, 2);
  EXPECT_EQ(kind_of([] { tree_diameter(cycle_graph(4)); }), ErrorKind::InvalidInput);
}

TEST(TreeDiameter, Tree18) {
  auto g = load_graph_file(fixture("tree18.txt"));
  auto d = tree_diameter(g);
  EXPECT_EQ(d.length, bf_tree_diameter(g));
  EXPECT_EQ(d.length, 8);
  EXPECT_EQ(d.path, (std::vector<Vertex>{1, 2, 3, 4, 5, 15, 16, 17, 0}));
}

TEST(TreeDiameter, RandomTreesAgreeWithAllPairs) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    auto t = random_tree(2 + i % 20, rng);
    auto d = tree_diameter(t);
    EXPECT_EQ(d.length, bf_tree_diameter(t));
    ASSERT_EQ(static_cast<int>(d.path.size()), d.length + 1);
    for (std::size_t j = 1; j < d.path.size(); ++j) EXPECT_TRUE(t.has_edge(d.path[j - 1], d.path[j]));
  }
}

TEST(ShortestPaths, MatrixMatchesFloyd) {
  auto tree18 = load_graph_file(fixture("tree18.txt"));
  EXPECT_EQ(shortest_path_matrix(tree18)(1, 0), 8);
  EXPECT_EQ(shortest_path_matrix(path_graph(3))(0, 2), 2);
  auto k4 = shortest_path_matrix(complete_graph(4));
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v) EXPECT_EQ(k4(u, v), u == v ? 0 : 1);
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    auto g = random_connected_graph(8, 0.35, rng);
    auto d = shortest_path_matrix(g);
    auto ref = bf_distances(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) {
        EXPECT_EQ(d(u, v), ref[u][v]);
        for (int w = 0; w < g.n(); ++w) EXPECT_LE(d(u, w), d(u, v) + d(v, w));
      }
    auto p = shortest_path(g, 0, g.n() - 1);
    EXPECT_EQ(static_cast<int>(p.size()) - 1, ref[0][g.n() - 1]);
  }
}

TEST(Patterns, C4Examples) {
  EXPECT_TRUE(enumerate_c4(path_graph(6)).empty());
  EXPECT_EQ(enumerate_c4(cycle_graph(4)).size(), 1u);
  auto k4 = enumerate_c4(complete_graph(4));
  EXPECT_EQ(k4.size(), 3u);
  EXPECT_EQ(k4.size(), bf_count_c4(complete_graph(4)));
  for (auto c : k4) {
    EXPECT_EQ(c[0], *std::min_element(c.begin(), c.end()));
    EXPECT_LT(c[1], c[3]);
  }
}

TEST(Patterns, C4CountsMatchBruteForce) {
  Rng rng(5);
  for (int i = 0; i < 60; ++i) {
    auto g = random_connected_graph(4 + i % 5, 0.5, rng);
    EXPECT_EQ(enumerate_c4(g).size(), bf_count_c4(g));
  }
  for (const auto& g : all_connected_graphs(5)) EXPECT_EQ(enumerate_c4(g).size(), bf_count_c4(g));
}

TEST(Patterns, GridExamples) {
  EXPECT_TRUE(enumerate_grid_2x3(path_graph(7)).empty());
  auto grid = grid_graph(2, 3);
  auto pats = enumerate_grid_2x3(grid);
  ASSERT_GE(pats.size(), 1u);
  EXPECT_EQ(pats.size(), bf_count_grids(grid));
  for (const auto& p : pats) {
    EXPECT_TRUE(p.embeds_in(grid));
    EXPECT_EQ(p, p.canonical());
  }
  auto k6 = complete_graph(6);
  EXPECT_EQ(enumerate_grid_2x3(k6).size(), bf_count_grids(k6));
  EXPECT_EQ(bf_count_grids(k6), 180u);  // 6!/4 labelled embeddings per geometric grid
}

TEST(Patterns, GridCountsMatchBruteForce) {
  Rng rng(9);
  for (int i = 0; i < 25; ++i) {
    auto g = random_connected_graph(6 + i % 3, 0.55, rng);
    EXPECT_EQ(enumerate_grid_2x3(g).size(), bf_count_grids(g));
  }
  EXPECT_EQ(enumerate_grid_2x3(grid_graph(3, 3)).size(), bf_count_grids(grid_graph(3, 3)));
}

TEST(Patterns, ConnectedSubsets) {
  auto p4 = path_graph(4);
  EXPECT_EQ(enumerate_connected_ksubsets(p4, 2),
            (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(enumerate_connected_ksubsets(p4, 4), (std::vector<std::vector<Vertex>>{{0, 1, 2, 3}}));
  auto pet = petersen();
  auto got = enumerate_connected_ksubsets(pet, 3);
  auto ref = bf_connected_subsets(pet, 3);
  ASSERT_EQ(got.size(), ref.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    EXPECT_TRUE(std::equal(got[i].begin(), got[i].end(), ref[i].begin(), ref[i].end()));
  Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    auto g = random_connected_graph(7, 0.4, rng);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(enumerate_connected_ksubsets(g, k).size(), bf_connected_subsets(g, k).size());
  }
}
