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

#include "khwp/bench.hpp"

#include <chrono>
#include <ostream>

#include "khwp/approx_2hwp.hpp"
#include "khwp/error.hpp"
#include "khwp/generate.hpp"
#include "khwp/hypergraph_solver.hpp"
#include "khwp/oracle.hpp"
#include "khwp/tree_solvers.hpp"

namespace khwp {

void write_csv_row(std::ostream& out, const BenchRecord& r) {
  out << r.id << ',' << r.n << ',' << r.m << ',' << r.k << ',' << r.algo << ',' << r.len
      << ',';
  if (r.oracle) out << *r.oracle;
  out << ',';
  if (r.bound) out << *r.bound;
  out << ',' << r.ms << ',' << r.seed << '\n';
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "tree-optimality", "tree-rhwp", "simple-3approx", "alg2", "hypergraph", "csc-graph"};
  return names;
}

namespace {

using Clock = std::chrono::steady_clock;

double millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

bool oracle_fits(const BenchOptions& o, int n, int k) {
  return o.with_oracle && n <= o.caps.oracle_max_n && k <= o.caps.oracle_max_k;
}

BenchRecord run_one(const BenchOptions& o, int index) {
  const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(index);
  Rng rng(seed);
  BenchRecord r;
  r.id = o.suite + "/" + std::string(kRngName) + "/" + std::to_string(index);
  r.seed = seed;
  r.k = o.k;

  if (o.suite == "tree-optimality") {
    auto tree = random_tree(o.n, rng);
    r.n = tree.n();
    r.m = tree.m();
    r.k = 1;
    r.algo = "one_hwp_tree";
    auto t0 = Clock::now();
    auto walk = one_hwp_tree(tree);
    r.ms = millis(t0);
    r.len = static_cast<long long>(walk.size()) - 1;
    r.bound = 2.0 * (tree.n() - 1) - tree_diameter(tree).length;
    if (oracle_fits(o, r.n, 1)) r.oracle = exact_hk(tree, 1, false, o.caps).length;
  } else if (o.suite == "tree-rhwp") {
    auto tree = random_tree(o.n, rng);
    r.n = tree.n();
    r.m = tree.m();
    r.algo = "k_rhwp_tree";
    auto t0 = Clock::now();
    auto walk = k_rhwp_tree(tree, o.k);
    r.ms = millis(t0);
    r.len = walk.length();
    r.bound = rhwp_lower_bound(tree, o.k);
    if (oracle_fits(o, r.n, o.k)) r.oracle = exact_hk(tree, o.k, true, o.caps).length;
  } else if (o.suite == "simple-3approx" || o.suite == "alg2") {
    auto g = random_connected_graph(o.n, o.p, rng);
    r.n = g.n();
    r.m = g.m();
    r.k = 2;
    auto t0 = Clock::now();
    if (o.suite == "alg2") {
      auto res = alg2(g, o.packing, o.caps);
      r.len = res.walk.length();
      r.algo = "alg2";
    } else {
      r.len = simple_3approx(g, o.caps).length();
      r.algo = "simple_3approx";
    }
    r.ms = millis(t0);
    if (oracle_fits(o, r.n, 2)) {
      r.oracle = exact_hk(g, 2, false, o.caps).length;
      r.bound = o.suite == "alg2" ? (3.0 - 1.0 / 6.0) * *r.oracle : 3.0 * *r.oracle + 1;
    }
  } else if (o.suite == "hypergraph") {
    auto h = random_hypergraph(o.n, o.m, o.k, rng);
    r.n = h.n();
    r.m = h.m();
    r.algo = "solve_khwp_hypergraph";
    auto t0 = Clock::now();
    auto res = solve_khwp_hypergraph(h);
    r.ms = millis(t0);
    r.len = res.walk.length();
    r.bound = 2.0 * static_cast<double>(res.cover.chosen.size());
    if (o.with_oracle && h.n() <= o.caps.oracle_max_n) {
      r.oracle = exact_hyperedge_walk(h, res.lstar, o.caps).length;
    }
  } else if (o.suite == "csc-graph") {
    auto g = random_connected_graph(o.n, o.p, rng);
    r.n = g.n();
    r.m = g.m();
    r.algo = "solve_khwp_graph_csc";
    auto t0 = Clock::now();
    r.len = solve_khwp_graph_csc(g, o.k, o.caps).length();
    r.ms = millis(t0);
    if (oracle_fits(o, r.n, o.k)) r.oracle = exact_hk(g, o.k, false, o.caps).length;
  } else {
    fail(ErrorKind::InvalidInput, "unknown suite: " + o.suite);
  }
  if (r.oracle && r.len < *r.oracle) {
    fail(ErrorKind::InvariantViolation, r.id + ": walk shorter than the optimum");
  }
  return r;
}

}  // namespace

std::vector<BenchRecord> run_suite(const BenchOptions& opts) {
  std::vector<BenchRecord> rows;
  rows.reserve(opts.trials);
  for (int i = 0; i < opts.trials; ++i) rows.push_back(run_one(opts, i));
  return rows;
}

}  // namespace khwp
