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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "khwp/caps.hpp"
#include "khwp/packing.hpp"

namespace khwp {

/// One CSV row. `bound` is the formula value the suite compares against
/// (closed form on trees, approximation ceiling elsewhere).
struct BenchRecord {
  std::string id;
  int n = 0;
  int m = 0;
  int k = 0;
  std::string algo;
  long long len = 0;
  std::optional<long long> oracle;
  std::optional<double> bound;
  double ms = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kCsvHeader = "id,n,m,k,algo,len,oracle,bound,ms,seed";

void write_csv_row(std::ostream& out, const BenchRecord& r);

struct BenchOptions {
  std::string suite = "tree-optimality";
  int n = 10;
  int trials = 20;
  std::uint64_t seed = 1;
  int k = 2;
  /// Edge probability for random graphs.
  double p = 0.4;
  /// Hyperedge count for the hypergraph suite.
  int m = 8;
  PackingMode packing = PackingMode::LocalSearch;
  /// Run the exact oracle when the instance is within caps.
  bool with_oracle = true;
  Caps caps;
};

/// tree-optimality, tree-rhwp, simple-3approx, alg2, hypergraph, csc-graph.
const std::vector<std::string>& suite_names();

/// Instance i is drawn from an engine seeded with seed + i. Throws
/// InvariantViolation if a solver reports a walk shorter than the oracle.
std::vector<BenchRecord> run_suite(const BenchOptions& opts);

}  // namespace khwp
