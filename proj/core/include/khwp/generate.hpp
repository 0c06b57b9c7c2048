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
#include <random>
#include <string_view>

#include "khwp/graph.hpp"

namespace khwp {

/// Every generator draws from this engine. The name goes into bench CSV rows
/// so sweeps can be replayed elsewhere.
using Rng = std::mt19937_64;
inline constexpr std::string_view kRngName = "mt19937_64";

/// Uniform labelled tree via a random Pruefer sequence.
Graph random_tree(int n, Rng& rng);

/// G(n, p), redrawn until connected. Throws InvalidInput after `attempts`
/// disconnected draws.
Graph random_connected_graph(int n, double p, Rng& rng, int attempts = 1000);

Graph grid_graph(int rows, int cols);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph complete_graph(int n);

/// m distinct random k-subsets of 0..n-1, redrawn until every vertex is
/// covered and the line graph is connected.
Hypergraph random_hypergraph(int n, int m, int k, Rng& rng, int attempts = 1000);

}  // namespace khwp
