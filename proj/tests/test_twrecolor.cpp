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

#include "rekolor/twrecolor.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "rekolor/decomp.hpp"
#include "rekolor/errors.hpp"
#include "rekolor/generators.hpp"
#include "rekolor/graph.hpp"
#include "rekolor/oracle.hpp"

using namespace rekolor;

namespace {

CompleteTreeDecomposition complete_td(const Graph& g) {
  TreewidthResult r = treewidth_exact(g);
  return make_complete(g, r.decomposition, r.treewidth);
}

}  // namespace

TEST_CASE("clique_blocking_arcs") {
  CHECK(clique_blocking_arcs(Coloring({1, 2}, 3), Coloring({2, 1}, 3)) ==
        std::vector<BlockingArc>{{0, 1}, {1, 0}});
  CHECK(clique_blocking_arcs(Coloring({1, 2}, 3), Coloring({1, 2}, 3))
            .empty());
  CHECK(clique_blocking_arcs(Coloring({1, 2}, 4), Coloring({3, 1}, 4)) ==
        std::vector<BlockingArc>{{1, 0}});
  CHECK_THROWS_AS(
      clique_blocking_arcs(Coloring({1, 2}, 3), Coloring({1}, 3)),
      input_error);
}

TEST_CASE("clique_recolor swaps K_2 in three forced moves") {
  RecolorSequence seq =
      clique_recolor(2, 3, Coloring({1, 2}, 3), Coloring({2, 1}, 3));
  CHECK(seq.steps ==
        std::vector<RecolorStep>{{0, 3}, {1, 1}, {0, 2}});
  CHECK(validate_sequence(gen_complete(2), seq) == Coloring({2, 1}, 3));
}

TEST_CASE("clique_recolor breaks the K_3 rotation once") {
  Coloring a({1, 2, 3}, 4);
  Coloring b({2, 3, 1}, 4);
  RecolorSequence seq = clique_recolor(3, 4, a, b);
  CHECK(validate_sequence(gen_complete(3), seq) == b);
  CHECK(seq.length() == 4);
  CHECK(per_vertex_recolor_counts(seq, 3) == std::vector<int>{2, 1, 1});
}

TEST_CASE("clique_recolor recolors every vertex at most twice") {
  // all 24 permutation targets of K_4 at k = 5
  Graph k4 = gen_complete(4);
  std::vector<int> perm{1, 2, 3, 4};
  Coloring a({1, 2, 3, 4}, 5);
  do {
    Coloring b(perm, 5);
    RecolorSequence seq = clique_recolor(4, 5, a, b);
    CHECK(validate_sequence(k4, seq) == b);
    for (int c : per_vertex_recolor_counts(seq, 4)) CHECK(c <= 2);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("clique_recolor preconditions") {
  CHECK_THROWS_AS(
      clique_recolor(2, 2, Coloring({1, 2}, 2), Coloring({2, 1}, 2)),
      input_error);
  CHECK_THROWS_AS(
      clique_recolor(2, 3, Coloring({1, 1}, 3), Coloring({2, 1}, 3)),
      input_error);
  CHECK_THROWS_AS(
      clique_recolor(2, 3, Coloring({1, 2, 3}, 3), Coloring({2, 1}, 3)),
      input_error);
}

TEST_CASE("family merge, extend and lift on the P_3 decomposition") {
  Graph p3 = gen_path(3);
  CompleteTreeDecomposition t{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  FamilyPartition fam = family_partition(t);

  Graph merged = merge_families(p3, fam);
  CHECK(merged == gen_complete(2));

  Coloring mc = merge_coloring(fam, Coloring({1, 2, 1}, 3));
  CHECK(mc == Coloring({1, 2}, 3));
  CHECK_THROWS_AS(merge_coloring(fam, Coloring({1, 2, 3}, 3)), input_error);

  CHECK(extend_coloring(fam, Coloring({2, 1}, 3), 3) ==
        Coloring({2, 1, 2}, 3));

  RecolorSequence lifted = lift_sequence(
      p3, fam, RecolorSequence{Coloring({1, 2}, 3), {{0, 3}, {1, 1}, {0, 2}}});
  CHECK(lifted.start == Coloring({1, 2, 1}, 3));
  CHECK(lifted.steps ==
        std::vector<RecolorStep>{{0, 3}, {2, 3}, {1, 1}, {0, 2}, {2, 2}});
  CHECK(validate_sequence(p3, lifted) == Coloring({2, 1, 2}, 3));
}

TEST_CASE("merge_families requires stable families") {
  Graph p3 = gen_path(3);
  FamilyPartition bad{{0, 0, 1}, 2};  // family 0 holds the edge 0-1
  CHECK_THROWS_AS(merge_families(p3, bad), input_error);
}

TEST_CASE("eliminate_color sprays one zone on the P_3 decomposition") {
  Graph p3 = gen_path(3);
  CompleteTreeDecomposition t{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  Coloring c({1, 2, 3}, 3);

  RecolorSequence seq = eliminate_color(p3, t, 0, c, 3, 3);
  CHECK(seq.steps == std::vector<RecolorStep>{{2, 1}});
  CHECK(validate_sequence(p3, seq) == Coloring({1, 2, 1}, 3));
}

TEST_CASE("eliminate_color preconditions") {
  Graph p3 = gen_path(3);
  CompleteTreeDecomposition t{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  Coloring c({1, 2, 3}, 3);
  // a sits in B_u
  CHECK_THROWS_AS(eliminate_color(p3, t, 0, c, 2, 3), input_error);
  // palette too small
  CHECK_THROWS_AS(eliminate_color(p3, t, 0, c, 3, 2), input_error);
  // not coherent outside B_u: bag {1,2} holds two vertices colored alike
  Graph e3(3);
  CompleteTreeDecomposition te{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  CHECK_THROWS_AS(eliminate_color(e3, te, 0, Coloring({1, 2, 2}, 3), 3, 3),
                  input_error);
  // u out of range
  CHECK_THROWS_AS(eliminate_color(p3, t, 5, c, 3, 3), input_error);
}

TEST_CASE("eliminate_color touches outside vertices at most once") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    PartialKTree pk = gen_partial_ktree(9, 2, 0.8, seed);
    const Graph& g = pk.graph;
    const CompleteTreeDecomposition& t = pk.decomposition;
    FamilyPartition fam = family_partition(t);
    int k = t.level + 2;

    // family-constant colorings are coherent everywhere
    std::vector<int> base(9);
    for (int v = 0; v < 9; ++v)
      base[static_cast<std::size_t>(v)] = fam.family_of[v] + 1;

    for (int u = 0; u < t.tree.node_count(); ++u) {
      for (int f = 0; f < fam.family_count; ++f) {
        int x = -1;  // the member of family f in bag u
        for (int v : t.tree.bags[static_cast<std::size_t>(u)])
          if (fam.family_of[v] == f) x = v;
        REQUIRE(x >= 0);
        std::vector<int> shifted = base;
        shifted[static_cast<std::size_t>(x)] = k;
        Coloring c(shifted, k);
        if (!is_proper(g, c)) continue;

        int a = f + 1;  // absent from B_u by construction
        RecolorSequence seq = eliminate_color(g, t, u, c, a, k);
        Coloring fin = validate_sequence(g, seq);
        for (int v = 0; v < 9; ++v) CHECK(fin.color(v) != a);
        std::vector<int> counts = per_vertex_recolor_counts(seq, 9);
        for (int v : t.tree.bags[static_cast<std::size_t>(u)])
          CHECK(counts[static_cast<std::size_t>(v)] == 0);
        for (int cnt : counts) CHECK(cnt <= 1);
      }
    }
  }
}

TEST_CASE("make_coherent is idempotent on coherent inputs") {
  Graph p3 = gen_path(3);
  CompleteTreeDecomposition t{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  CoherentResult r = make_coherent(p3, t, 3, Coloring({1, 2, 1}, 3));
  CHECK(r.sequence.steps.empty());
  CHECK(r.coherent == Coloring({1, 2, 1}, 3));
}

TEST_CASE("make_coherent repairs the P_3 rainbow") {
  Graph p3 = gen_path(3);
  CompleteTreeDecomposition t{{{{0, 1}, {1, 2}}, {{0, 1}}}, 1};
  CoherentResult r = make_coherent(p3, t, 3, Coloring({1, 2, 3}, 3));
  CHECK(validate_sequence(p3, r.sequence) == r.coherent);
  CHECK(is_coherent(p3, t, r.coherent));
  CHECK(r.sequence.length() <= 9);
}

TEST_CASE("make_coherent stays within n*n steps on sampled k-trees") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    int width = 1 + static_cast<int>(seed % 3);
    PartialKTree pk = gen_partial_ktree(8, width, 0.7, seed);
    int k = width + 2;

    // proper coloring sampled in id order: always extendable at k >= width+2
    std::vector<int> cols(8, 0);
    std::uint64_t state = seed * 2654435761u + 17;
    for (int v = 0; v < 8; ++v) {
      std::vector<int> free;
      for (int c = 1; c <= k; ++c) {
        bool ok = true;
        for (int w : pk.graph.neighbors(v))
          if (w < v && cols[static_cast<std::size_t>(w)] == c) ok = false;
        if (ok) free.push_back(c);
      }
      REQUIRE(!free.empty());
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      cols[static_cast<std::size_t>(v)] =
          free[(state >> 33) % free.size()];
    }
    Coloring a(cols, k);

    CoherentResult r = make_coherent(pk.graph, pk.decomposition, k, a);
    CHECK(validate_sequence(pk.graph, r.sequence) == r.coherent);
    CHECK(is_coherent(pk.graph, pk.decomposition, r.coherent));
    CHECK(r.sequence.length() <= 64);
  }
}

TEST_CASE("tw_recolor joins the C_4 bipartitions at k = 4") {
  Graph c4 = gen_cycle(4);
  CompleteTreeDecomposition t = complete_td(c4);
  CHECK(t.level == 2);
  Coloring a({1, 2, 1, 2}, 4);
  Coloring b({2, 1, 2, 1}, 4);

  RecolorSequence seq = tw_recolor(c4, t, 4, a, b);
  CHECK(seq.start == a);
  CHECK(validate_sequence(c4, seq) == b);
  CHECK(seq.length() <= 2 * (16 + 4));

  auto dist = oracle_distance(c4, 4, a, b);
  REQUIRE(dist.has_value());
  CHECK(static_cast<std::size_t>(*dist) <= seq.length());
}

TEST_CASE("tw_recolor on a path at k = 3") {
  Graph p4 = gen_path(4);
  CompleteTreeDecomposition t = complete_td(p4);
  CHECK(t.level == 1);
  Coloring a({1, 2, 1, 2}, 3);
  Coloring b({2, 1, 2, 1}, 3);
  RecolorSequence seq = tw_recolor(p4, t, 3, a, b);
  CHECK(validate_sequence(p4, seq) == b);
  CHECK(seq.length() <= 2 * (16 + 4));
}

TEST_CASE("tw_recolor same endpoints is a no-op") {
  Graph c4 = gen_cycle(4);
  CompleteTreeDecomposition t = complete_td(c4);
  Coloring a({1, 2, 1, 2}, 4);
  CHECK(tw_recolor(c4, t, 4, a, a).steps.empty());
}

TEST_CASE("tw_recolor needs level + 2 colors") {
  Graph c4 = gen_cycle(4);
  CompleteTreeDecomposition t = complete_td(c4);
  CHECK_THROWS_AS(
      tw_recolor(c4, t, 3, Coloring({1, 2, 1, 2}, 3),
                 Coloring({2, 1, 2, 1}, 3)),
      input_error);
}

TEST_CASE("tw_recolor tracks the oracle on sampled k-trees") {
  for (std::uint64_t seed = 100; seed < 112; ++seed) {
    int width = 1 + static_cast<int>(seed % 2);
    PartialKTree pk = gen_partial_ktree(7, width, 0.8, seed);
    int k = width + 2;
    int n = 7;

    std::uint64_t state = seed;
    auto sample = [&]() {
      std::vector<int> cols(static_cast<std::size_t>(n), 0);
      for (int v = 0; v < n; ++v) {
        std::vector<int> free;
        for (int c = 1; c <= k; ++c) {
          bool ok = true;
          for (int w : pk.graph.neighbors(v))
            if (w < v && cols[static_cast<std::size_t>(w)] == c) ok = false;
          if (ok) free.push_back(c);
        }
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        cols[static_cast<std::size_t>(v)] =
            free[(state >> 33) % free.size()];
      }
      return Coloring(cols, k);
    };

    Coloring a = sample();
    Coloring b = sample();
    RecolorSequence seq = tw_recolor(pk.graph, pk.decomposition, k, a, b);
    CHECK(validate_sequence(pk.graph, seq) == b);
    CHECK(seq.length() <= static_cast<std::size_t>(2 * (n * n + n)));

    auto dist = oracle_distance(pk.graph, k, a, b);
    REQUIRE(dist.has_value());  // k >= tw + 2 connects R_k
    CHECK(static_cast<std::size_t>(*dist) <= seq.length());
  }
}
