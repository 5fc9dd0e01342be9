// Copyright 2026 The rekolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include "rekolor/decomp.hpp"
#include "rekolor/graph.hpp"

namespace rekolor {

// K_n.
Graph gen_complete(int n);

// K_{n,n} minus the perfect matching {u_i v_i}: vertices u_1..u_n are
// 0..n-1, v_1..v_n are n..2n-1, edges u_i v_j for all i != j.
Graph gen_bipartite_minus_matching(int n);

// Path on n vertices 0-1-...-(n-1).
Graph gen_path(int n);

// Cycle on n vertices (n >= 3).
Graph gen_cycle(int n);

// Star on n vertices: center 0, leaves 1..n-1.
Graph gen_star(int n);

// Subgraph of a random k-tree plus the witnessing tree decomposition of
// the full k-tree (so the graph has treewidth <= k). Built by growing a
// random complete decomposition: each new vertex v is placed in a bag
// (B - {y}) U {v} for a random existing bag B and random y in B, made
// adjacent to B - {y}; afterwards every k-tree edge is kept with
// probability edge_keep_prob. Deterministic for a fixed seed.
// Requires 0 <= k <= n-1 (k = 0 gives an edgeless graph).
struct PartialKTree {
  Graph graph;
  CompleteTreeDecomposition decomposition;
};

PartialKTree gen_partial_ktree(int n, int k, double edge_keep_prob,
                               std::uint64_t seed);

// Erdos-Renyi G(n, p), each edge kept independently with probability p.
Graph gen_random_graph(int n, double p, std::uint64_t seed);

}  // namespace rekolor
