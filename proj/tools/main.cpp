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

// khwp command-line front end.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "khwp/approx_2hwp.hpp"
#include "khwp/bench.hpp"
#include "khwp/caps.hpp"
#include "khwp/error.hpp"
#include "khwp/generate.hpp"
#include "khwp/graph.hpp"
#include "khwp/hypergraph_solver.hpp"
#include "khwp/oracle.hpp"
#include "khwp/tree_solvers.hpp"
#include "khwp/walk.hpp"

namespace {

using namespace khwp;
using Clock = std::chrono::steady_clock;

struct Common {
  std::string config;
  std::string out;
  std::string csv;
};

Caps caps_from(const Common& c) { return c.config.empty() ? Caps{} : Caps::load(c.config); }

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void emit_record(const Common& c, const BenchRecord& r) {
  if (c.csv.empty()) {
    std::cerr << kCsvHeader << '\n';
    write_csv_row(std::cerr, r);
    return;
  }
  const bool fresh = !std::filesystem::exists(c.csv) || std::filesystem::file_size(c.csv) == 0;
  std::ofstream f(c.csv, std::ios::app);
  if (!f) fail(ErrorKind::InvalidInput, "cannot open " + c.csv);
  if (fresh) f << kCsvHeader << '\n';
  write_csv_row(f, r);
}

// Re-validates before anything is reported; a solver bug surfaces as exit 4.
WalkReport checked(const Graph& g, const TransitionWalk& w) {
  auto rep = validate_walk(g, w);
  if (!rep.ok()) {
    fail(ErrorKind::InvariantViolation,
         rep.valid() ? "solver output does not span the graph"
                     : "solver output invalid: " + rep.violation->message);
  }
  return rep;
}

void write_out(const Common& c, const Graph& g, const TransitionWalk& w) {
  if (c.out.empty()) {
    write_walk(std::cout, g, w);
    return;
  }
  std::ofstream f(c.out);
  if (!f) fail(ErrorKind::InvalidInput, "cannot write " + c.out);
  write_walk(f, g, w);
}

BenchRecord record_for(const Graph& g, int k, std::string algo, long long len, double ms) {
  BenchRecord r;
  r.id = "cli";
  r.n = g.n();
  r.m = g.m();
  r.k = k;
  r.algo = std::move(algo);
  r.len = len;
  r.ms = ms;
  return r;
}

int run(int argc, char** argv) {
  CLI::App app{"k-agent Hamiltonian walk solvers"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "caps file (key=value lines)");
    sub->add_option("--out", common.out, "output file");
    sub->add_option("--csv", common.csv, "append a record row here instead of stderr");
  };

  std::string graph_path, walk_path;
  int k = 2;
  bool trace = false, restricted = false, with_oracle = false;
  std::string mode = "alg2", packing = "local";

  auto* s1 = app.add_subcommand("solve1", "optimal single-agent walk on a tree");
  s1->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  add_common(s1);

  auto* sk = app.add_subcommand("solvek", "restricted k-agent walk on a tree");
  sk->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  sk->add_option("--k", k)->check(CLI::PositiveNumber);
  sk->add_flag("--trace", trace, "print head/tail per step");
  add_common(sk);

  auto* s2 = app.add_subcommand("solve2", "two-agent approximation on a graph");
  s2->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  s2->add_option("--mode", mode)->check(CLI::IsMember({"simple", "alg2"}));
  s2->add_option("--packing", packing)->check(CLI::IsMember({"greedy", "local", "exact"}));
  s2->add_flag("--oracle", with_oracle, "also compute the exact optimum");
  add_common(s2);

  auto* sh = app.add_subcommand("solveh", "walk over a k-uniform hypergraph");
  sh->add_option("hypergraph", graph_path)->required()->check(CLI::ExistingFile);
  add_common(sh);

  auto* so = app.add_subcommand("oracle", "exact optimum by state-space search");
  so->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  so->add_option("--k", k)->check(CLI::PositiveNumber);
  so->add_flag("--restricted", restricted, "only one-new-vertex transitions");
  add_common(so);

  auto* sv = app.add_subcommand("validate", "check a walk file against a graph");
  sv->add_option("graph", graph_path)->required()->check(CLI::ExistingFile);
  sv->add_option("walk", walk_path)->required()->check(CLI::ExistingFile);
  add_common(sv);

  BenchOptions bo;
  auto* sb = app.add_subcommand("bench", "seeded benchmark sweep, CSV output");
  sb->add_option("--suite", bo.suite)->check(CLI::IsMember(suite_names()));
  sb->add_option("--n", bo.n)->check(CLI::PositiveNumber);
  sb->add_option("--trials", bo.trials)->check(CLI::NonNegativeNumber);
  sb->add_option("--seed", bo.seed);
  sb->add_option("--k", bo.k)->check(CLI::PositiveNumber);
  sb->add_option("--p", bo.p)->check(CLI::Range(0.0, 1.0));
  sb->add_option("--m", bo.m)->check(CLI::PositiveNumber);
  sb->add_option("--packing", packing)->check(CLI::IsMember({"greedy", "local", "exact"}));
  bool no_oracle = false;
  sb->add_flag("--no-oracle", no_oracle);
  add_common(sb);

  std::string kind = "tree";
  int gn = 10, rows = 2, cols = 3, gm = 8, gk = 3;
  double gp = 0.4;
  std::uint64_t gseed = 1;
  auto* sg = app.add_subcommand("generate", "write a seeded instance");
  sg->add_option("--kind", kind)->check(CLI::IsMember({"tree", "random_graph", "grid", "hypergraph"}));
  sg->add_option("--n", gn)->check(CLI::PositiveNumber);
  sg->add_option("--p", gp)->check(CLI::Range(0.0, 1.0));
  sg->add_option("--rows", rows)->check(CLI::PositiveNumber);
  sg->add_option("--cols", cols)->check(CLI::PositiveNumber);
  sg->add_option("--m", gm)->check(CLI::PositiveNumber);
  sg->add_option("--k", gk)->check(CLI::PositiveNumber);
  sg->add_option("--seed", gseed);
  add_common(sg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ErrorKind::InvalidInput);
  }

  const Caps caps = caps_from(common);

  if (*s1) {
    auto g = load_graph_file(graph_path);
    auto t0 = Clock::now();
    auto seq = one_hwp_tree(g);
    const double ms = ms_since(t0);
    auto w = as_walk(seq);
    auto rep = checked(g, w);
    write_out(common, g, w);
    auto r = record_for(g, 1, "one_hwp_tree", rep.length, ms);
    r.bound = 2.0 * (g.n() - 1) - tree_diameter(g).length;
    emit_record(common, r);
    std::cout << "length " << rep.length << '\n';
  } else if (*sk) {
    auto g = load_graph_file(graph_path);
    std::vector<RhwpStep> steps;
    auto t0 = Clock::now();
    auto w = k_rhwp_tree(g, k, trace ? &steps : nullptr);
    const double ms = ms_since(t0);
    auto rep = checked(g, w);
    write_out(common, g, w);
    if (trace) {
      for (std::size_t t = 0; t < steps.size(); ++t) {
        std::cout << "step " << t + 1 << " head " << steps[t].head << " tail " << steps[t].tail
                  << " mover " << steps[t].mover << " to " << steps[t].anchor << '\n';
      }
    }
    auto r = record_for(g, k, "k_rhwp_tree", rep.length, ms);
    r.bound = rhwp_lower_bound(g, k);
    emit_record(common, r);
    std::cout << "length " << rep.length << '\n';
  } else if (*s2) {
    auto g = load_graph_file(graph_path);
    auto t0 = Clock::now();
    std::optional<Alg2Result> res;
    TransitionWalk w;
    if (mode == "alg2") {
      res = alg2(g, parse_packing_mode(packing), caps);
      w = res->walk;
    } else {
      w = simple_3approx(g, caps);
    }
    const double ms = ms_since(t0);
    auto rep = checked(g, w);
    write_out(common, g, w);
    std::optional<int> h2;
    if (with_oracle) h2 = exact_hk(g, 2, false, caps).length;
    auto r = record_for(g, 2, mode == "alg2" ? "alg2" : "simple_3approx", rep.length, ms);
    if (h2) r.oracle = *h2;
    emit_record(common, r);
    std::cout << "length " << rep.length << '\n';
    if (res) {
      const auto& d = res->diagnostics;
      std::cout << "diag n,m,c4,grids,w_sol,len_tr,match_cost,walk_len,oracle_h2\n"
                << "diag " << g.n() << ',' << g.m() << ',' << d.c4_count << ','
                << d.grid_count << ',' << d.packing_weight << ',' << d.len_tr << ','
                << d.matching_cost << ',' << d.walk_length << ',';
      if (h2) std::cout << *h2;
      std::cout << '\n';
      if (d.matching_heuristic) std::cout << "note matching solved heuristically\n";
      if (!d.odd_bound_holds) {
        fail(ErrorKind::InvariantViolation,
             "odd contracted-node bound breached: " + std::to_string(d.n_odd_c) + " > " +
                 std::to_string(d.odd_bound));
      }
    }
  } else if (*sh) {
    auto h = load_hypergraph_file(graph_path);
    auto t0 = Clock::now();
    auto res = solve_khwp_hypergraph(h);
    const double ms = ms_since(t0);
    auto rep = validate_hyper_walk(h, res.lstar, res.walk);
    if (!rep.ok()) fail(ErrorKind::InvariantViolation, "hyperedge walk failed validation");
    if (common.out.empty()) {
      write_hyper_walk(std::cout, h, res.lstar, res.walk);
    } else {
      std::ofstream f(common.out);
      if (!f) fail(ErrorKind::InvalidInput, "cannot write " + common.out);
      write_hyper_walk(f, h, res.lstar, res.walk);
    }
    BenchRecord r;
    r.id = "cli";
    r.n = h.n();
    r.m = h.m();
    r.k = h.k();
    r.algo = "solve_khwp_hypergraph";
    r.len = rep.length;
    r.bound = 2.0 * static_cast<double>(res.cover.chosen.size());
    r.ms = ms;
    emit_record(common, r);
    std::cout << "length " << rep.length << " cover " << res.cover.chosen.size() << '\n';
  } else if (*so) {
    auto g = load_graph_file(graph_path);
    auto res = exact_hk(g, k, restricted, caps);
    checked(g, res.witness);
    if (!common.out.empty()) write_out(common, g, res.witness);
    std::cout << "optimal " << res.length << '\n';
  } else if (*sv) {
    auto g = load_graph_file(graph_path);
    auto w = read_walk_file(walk_path);
    auto rep = validate_walk(g, w);
    if (!rep.valid()) {
      std::cout << "invalid step " << rep.violation->step << ": " << rep.violation->message
                << '\n';
      return static_cast<int>(ErrorKind::InvalidInput);
    }
    std::cout << "valid length " << rep.length << " spanning " << (rep.spanning ? "yes" : "no")
              << '\n';
    return rep.spanning ? 0 : static_cast<int>(ErrorKind::InvalidInput);
  } else if (*sb) {
    bo.packing = parse_packing_mode(packing);
    bo.with_oracle = !no_oracle;
    bo.caps = caps;
    auto rows_out = run_suite(bo);
    if (common.csv.empty()) {
      std::cout << kCsvHeader << '\n';
      for (const auto& r : rows_out) write_csv_row(std::cout, r);
    } else {
      for (const auto& r : rows_out) emit_record(common, r);
    }
  } else if (*sg) {
    Rng rng(gseed);
    std::ostringstream text;
    if (kind == "hypergraph") {
      write_hypergraph(text, random_hypergraph(gn, gm, gk, rng));
    } else if (kind == "tree") {
      write_graph(text, random_tree(gn, rng));
    } else if (kind == "random_graph") {
      write_graph(text, random_connected_graph(gn, gp, rng));
    } else {
      write_graph(text, grid_graph(rows, cols));
    }
    if (common.out.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream f(common.out);
      if (!f) fail(ErrorKind::InvalidInput, "cannot write " + common.out);
      f << text.str();
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const khwp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(khwp::ErrorKind::InvariantViolation);
  }
}
