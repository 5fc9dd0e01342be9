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

#include <vector>

#include "rekolor/graph.hpp"

namespace rekolor {

// A visiting order x_1,...,x_n for greedy coloring.
struct VertexOrder {
  std::vector<int> order;
};

// Throws input_error unless o is a permutation of 0..n-1.
void require_vertex_order(const Graph& g, const VertexOrder& o);

// C(G,O): each vertex takes the smallest color absent among its earlier
// neighbors. Proper by construction; uses colors 1..max.
Coloring greedy_coloring(const Graph& g, const VertexOrder& o);

// True iff every vertex colored c has, for each color j < c, a neighbor
// colored j. Exactly the colorings achievable as C(G,O) for some O.
bool is_greedy_feasible(const Graph& g, const Coloring& c);

// chi_g(G): worst number of colors over all greedy colorings. Branch and
// bound over greedy-feasible partial colorings; guarded by n.
int grundy_number_exact(const Graph& g, int guard_max_n = 16);

// Reference implementation enumerating all n! orders; cross-check only.
int grundy_number_bruteforce(const Graph& g, int guard_max_n = 8);

struct ChromaticInfo {
  int chromatic_number = 0;
  Coloring witness;  // optimal and greedy-feasible
};

// Exact chi(G) by incremental-k backtracking, plus a witness made greedy
// by sweeping every vertex down to its smallest proper color until a
// fixpoint. Guarded by n.
ChromaticInfo chromatic_number_exact(const Graph& g, int guard_max_n = 18);

// Sequence from a to beta of raw length <= 2*chi(G)*n. beta must be an
// optimal greedy-feasible coloring, k >= chi_g(G)+1, a proper. Each
// recursion level does one greedy re-pass over the color classes of the
// current coloring (ascending colors, ascending ids within a class),
// evacuates the vertices wrongly sitting in the lowest class, settles
// that class, then recurses on the rest with the palette shifted.
RecolorSequence grundy_recolor_to_optimal(const Graph& g, int k,
                                          const Coloring& a,
                                          const Coloring& beta);

// Sequence a -> b of raw length <= 4*chi_g(G)*n for k >= chi_g(G)+1:
// route both endpoints to a common optimal greedy coloring and reverse
// the second half.
RecolorSequence grundy_recolor(const Graph& g, int k, const Coloring& a,
                               const Coloring& b);

}  // namespace rekolor
