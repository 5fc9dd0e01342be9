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

#include <utility>
#include <vector>

#include "rekolor/decomp.hpp"
#include "rekolor/graph.hpp"

namespace rekolor {

// Blocking digraph for clique recoloring: arc x -> y iff x's target
// color equals y's current color. In/out-degrees are at most 1, so the
// arcs decompose into directed paths and circuits.
struct BlockingArc {
  int from = 0;
  int to = 0;

  bool operator==(const BlockingArc& other) const = default;
};

std::vector<BlockingArc> clique_blocking_arcs(const Coloring& current,
                                              const Coloring& target);

// Recolors K_n from a to b with every vertex recolored at most twice.
// Requires k >= n+1 and injective colorings. Circuits are broken first
// (smallest-id circuit vertex moves to the smallest free color), then
// out-degree-0 vertices move straight to their targets.
RecolorSequence clique_recolor(int clique_size, int k, const Coloring& a,
                               const Coloring& b);

// Identifies each family into one vertex (vertex id = family id).
// Requires every family to be a stable set.
Graph merge_families(const Graph& g, const FamilyPartition& p);

// Coloring of the merged graph from a family-constant coloring of g.
Coloring merge_coloring(const FamilyPartition& p, const Coloring& c);

// Family-constant extension of a merged-graph coloring back to g.
Coloring extend_coloring(const FamilyPartition& p, const Coloring& merged,
                         int n);

// Expands a sequence on the merged graph to g: each merged step recolors
// the family's members one after another in ascending vertex id. The
// per-vertex count of a member never exceeds its family vertex's count.
// An improper intermediate is an invariant panic, never repaired.
RecolorSequence lift_sequence(const Graph& g, const FamilyPartition& p,
                              const RecolorSequence& merged_seq);

// Recolors so that color a disappears, touching only vertices outside
// B_u and each at most once, preserving (V - B_u)-coherence. Requires
// k >= level+2, c proper and (V - B_u)-coherent, a in 1..k and absent
// from B_u. u is a node id of t.
RecolorSequence eliminate_color(const Graph& g,
                                const CompleteTreeDecomposition& t, int u,
                                const Coloring& c, int a, int k);

// Treatment sweep: drives a to a V-coherent coloring in <= n*n raw
// steps. Requires k >= t.level+2. Returns the sequence and its final
// coloring. The four loop invariants (treated set growth, restricted
// decomposition completeness, bounded per-step recolorings, treated-set
// coherence) are asserted after every step.
struct CoherentResult {
  RecolorSequence sequence;
  Coloring coherent;
};

CoherentResult make_coherent(const Graph& g,
                             const CompleteTreeDecomposition& t, int k,
                             const Coloring& a);

// Full engine: a -> b in <= 2*(n*n + n) raw steps for k >= t.level+2,
// via coherent sweeps on both endpoints and a lifted clique bridge.
RecolorSequence tw_recolor(const Graph& g,
                           const CompleteTreeDecomposition& t, int k,
                           const Coloring& a, const Coloring& b);

}  // namespace rekolor
