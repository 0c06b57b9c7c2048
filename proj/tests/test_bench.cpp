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

#include "khwp/bench.hpp"
#include "khwp/caps.hpp"
#include "khwp/error.hpp"
#include "khwp/generate.hpp"

using namespace khwp;

TEST(Generate, Deterministic) {
  Rng a(7), b(7);
  auto g1 = random_connected_graph(8, 0.4, a);
  auto g2 = random_connected_graph(8, 0.4, b);
  std::ostringstream s1, s2;
  write_graph(s1, g1);
  write_graph(s2, g2);
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_TRUE(g1.is_connected());
}

TEST(Generate, Shapes) {
  Rng rng(1);
  for (int n = 1; n < 30; ++n) EXPECT_TRUE(random_tree(n, rng).is_tree());
  EXPECT_EQ(grid_graph(2, 3).m(), 7);
  EXPECT_EQ(complete_graph(5).m(), 10);
  EXPECT_EQ(star_graph(4).n(), 5);
  EXPECT_EQ(cycle_graph(5).m(), 5);
  auto h = random_hypergraph(9, 8, 3, rng);
  EXPECT_EQ(h.m(), 8);
  EXPECT_TRUE(h.is_connected());
  EXPECT_THROW(random_connected_graph(10, 0.0, rng, 5), Error);
}

TEST(Caps, ParseAndRefuseUnknown) {
  std::istringstream in("# caps\noracle_max_n = 10\nexact_matching_max_odd=12\n");
  auto c = Caps::parse(in);
  EXPECT_EQ(c.oracle_max_n, 10);
  EXPECT_EQ(c.exact_matching_max_odd, 12);
  EXPECT_EQ(c.exact_csc_max_family, 20);
  std::istringstream bad("nonsense = 3\n");
  EXPECT_THROW(Caps::parse(bad), Error);
  std::istringstream worse("oracle_max_n = many\n");
  EXPECT_THROW(Caps::parse(worse), Error);
}

TEST(Bench, CsvSchema) {
  BenchRecord r;
  r.id = "x/mt19937_64/0";
  r.n = 3;
  r.m = 2;
  r.k = 1;
  r.algo = "a";
  r.len = 4;
  r.ms = 0.5;
  r.seed = 9;
  std::ostringstream out;
  write_csv_row(out, r);
  EXPECT_EQ(out.str(), "x/mt19937_64/0,3,2,1,a,4,,,0.5,9\n");
  EXPECT_EQ(kCsvHeader, "id,n,m,k,algo,len,oracle,bound,ms,seed");
}

TEST(Bench, EverySuiteRunsAndReplays) {
  for (const auto& suite : suite_names()) {
    BenchOptions o;
    o.suite = suite;
    o.n = suite == "hypergraph" ? 8 : 7;
    o.trials = 3;
    o.seed = 40;
    o.k = suite == "hypergraph" ? 3 : 2;
    o.m = 9;
    auto rows = run_suite(o);
    auto again = run_suite(o);
    ASSERT_EQ(rows.size(), 3u) << suite;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      EXPECT_EQ(rows[i].len, again[i].len);
      EXPECT_EQ(rows[i].seed, o.seed + i);
      EXPECT_NE(rows[i].id.find("mt19937_64"), std::string::npos);
      if (rows[i].oracle) EXPECT_GE(rows[i].len, *rows[i].oracle);
    }
  }
}

TEST(Bench, TreeOptimalityMatchesFormula) {
  BenchOptions o;
  o.suite = "tree-optimality";
  o.n = 40;
  o.trials = 50;
  o.with_oracle = false;
  for (const auto& r : run_suite(o)) EXPECT_EQ(static_cast<double>(r.len), *r.bound);
}
