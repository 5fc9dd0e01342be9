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

#include <string>
#include <utility>
#include <vector>

#include "rekolor/graph.hpp"

namespace rekolor {

// Tree decomposition: bags indexed by node id 0..node_count-1, bags kept
// sorted and duplicate-free, edges form a tree over node ids.
struct TreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  // max bag size - 1; -1 for an empty decomposition
  int width() const;

  bool operator==(const TreeDecomposition& other) const = default;
};

struct DecompositionCheck {
  bool ok = false;
  int size = -1;           // max bag - 1, set when ok
  std::string violation;   // names the violated axiom and a witness
};

// Checks structural sanity (tree shape, sorted bags, ids in range) plus
// the three axioms: vertex coverage, edge coverage, and connectedness of
// every vertex's occurrence set. Violations are results, not errors.
DecompositionCheck validate_tree_decomposition(const Graph& g,
                                               const TreeDecomposition& t);

// Throwing wrapper; raises input_error with the violation text.
void require_tree_decomposition(const Graph& g, const TreeDecomposition& t);

// Level-l complete decomposition: every bag has exactly level+1 vertices
// and adjacent bags share exactly level of them.
struct CompleteTreeDecomposition {
  TreeDecomposition tree;
  int level = 0;

  bool operator==(const CompleteTreeDecomposition& other) const = default;
};

// validate_tree_decomposition plus the completeness axioms.
DecompositionCheck validate_complete_decomposition(
    const Graph& g, const CompleteTreeDecomposition& t);

void require_complete_decomposition(const Graph& g,
                                    const CompleteTreeDecomposition& t);

// True if no bag is contained in any other bag.
bool is_minimal(const TreeDecomposition& t);

// Contracts edges with nested endpoint bags until none remain. For a
// valid decomposition the result is valid with the same or smaller width.
TreeDecomposition minimalize(const TreeDecomposition& t);

// Decomposition of G - removed: drops `removed` from every bag, then
// contracts every edge whose endpoint bags became nested, to a fixpoint.
// Bags keep original vertex ids; node ids are renumbered compactly.
TreeDecomposition restrict_decomposition(const TreeDecomposition& t,
                                         const std::vector<int>& removed);

// Same restriction applied to a complete decomposition; removing a baby
// keeps the result level-complete (smaller level once the bags shrink
// below level+1 vertices).
TreeDecomposition restrict_decomposition(const CompleteTreeDecomposition& t,
                                         const std::vector<int>& removed);

// Exact treewidth by dynamic programming over vertex subsets along
// elimination orderings, with a minimal witness decomposition.
// Guarded: throws resource_error when n > guard_max_n.
struct TreewidthResult {
  int treewidth = 0;
  TreeDecomposition decomposition;
};

TreewidthResult treewidth_exact(const Graph& g, int guard_max_n = 20);

// Grows a decomposition whose bags have size <= level+1 into a
// level-complete one; every input bag ends up inside some output bag.
// Requires size(t) <= level <= n-1 and t valid for g. The input is
// minimalized first, so adjacent nested bags are tolerated.
CompleteTreeDecomposition make_complete(const Graph& g,
                                        const TreeDecomposition& t,
                                        int level);

// Babies: vertices appearing in exactly one bag whose node is a leaf.
// Convention for a 1-node tree: every bag member is a baby.
std::vector<int> find_babies(const CompleteTreeDecomposition& t);

// Stable families: the partition of V by the transitive closure of the
// parent relation (x,y parents iff some tree edge uv has {x} = B_u - B_v
// and {y} = B_v - B_u). A complete decomposition has level+1 families,
// each with exactly one member per bag.
struct FamilyPartition {
  std::vector<int> family_of;  // vertex -> family id 0..family_count-1
  int family_count = 0;
};

FamilyPartition family_partition(const CompleteTreeDecomposition& t);

// X-coherence: every parent pair inside X shares a color, and inside any
// bag a member of X is the unique holder of its color.
bool is_coherent(const Graph& g, const CompleteTreeDecomposition& t,
                 const Coloring& c, const std::vector<int>& X);

// Coherence on all of V.
bool is_coherent(const Graph& g, const CompleteTreeDecomposition& t,
                 const Coloring& c);

}  // namespace rekolor
