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

#include "rekolor/grundy.hpp"

#include <vector>

#include "doctest.h"
#include "rekolor/errors.hpp"
#include "rekolor/generators.hpp"
#include "rekolor/graph.hpp"
#include "rekolor/oracle.hpp"

using namespace rekolor;

TEST_CASE("greedy_coloring follows the visiting order") {
  Graph p4 = gen_path(4);
  Coloring c = greedy_coloring(p4, {{0, 3, 1, 2}});
  CHECK(c.colors() == std::vector<int>{1, 2, 3, 1});

  Graph p3 = gen_path(3);
  CHECK(greedy_coloring(p3, {{0, 2, 1}}).colors() ==
        std::vector<int>{1, 2, 1});
  CHECK(greedy_coloring(p3, {{0, 1, 2}}).colors() ==
        std::vector<int>{1, 2, 1});

  CHECK_THROWS_AS(greedy_coloring(p3, {{0, 1}}), input_error);
  CHECK_THROWS_AS(greedy_coloring(p3, {{0, 1, 1}}), input_error);
}

TEST_CASE("is_greedy_feasible characterizes greedy outputs") {
  Graph p3 = gen_path(3);
  CHECK(is_greedy_feasible(p3, Coloring({1, 2, 1}, 3)));
  CHECK(is_greedy_feasible(p3, Coloring({2, 1, 2}, 3)));  // order v2,v1,v3
  CHECK(!is_greedy_feasible(p3, Coloring({1, 3, 1}, 3)));
  CHECK(!is_greedy_feasible(p3, Coloring({2, 3, 2}, 3)));

  Graph p4 = gen_path(4);
  CHECK(is_greedy_feasible(p4, Coloring({1, 2, 3, 1}, 3)));
}

TEST_CASE("grundy numbers of fixed families") {
  CHECK(grundy_number_exact(gen_path(4)) == 3);
  CHECK(grundy_number_exact(gen_cycle(6)) == 3);
  CHECK(grundy_number_exact(gen_star(4)) == 2);
  CHECK(grundy_number_exact(gen_complete(4)) == 4);
  CHECK(grundy_number_exact(gen_bipartite_minus_matching(2)) == 2);
  CHECK(grundy_number_exact(gen_bipartite_minus_matching(3)) == 3);
  CHECK(grundy_number_exact(gen_bipartite_minus_matching(4)) == 4);
  CHECK(grundy_number_exact(Graph(3)) == 1);
  CHECK(grundy_number_exact(Graph(0)) == 0);
}

TEST_CASE("branch and bound matches the factorial reference") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gen_random_graph(7, 0.45, seed);
    CHECK(grundy_number_exact(g) == grundy_number_bruteforce(g));
  }
}

TEST_CASE("grundy guards") {
  CHECK_THROWS_AS(grundy_number_exact(Graph(17)), resource_error);
  CHECK_THROWS_AS(grundy_number_bruteforce(Graph(9)), resource_error);
}

TEST_CASE("chromatic numbers and witnesses") {
  CHECK(chromatic_number_exact(gen_cycle(4)).chromatic_number == 2);
  CHECK(chromatic_number_exact(gen_cycle(5)).chromatic_number == 3);
  CHECK(chromatic_number_exact(gen_complete(4)).chromatic_number == 4);
  CHECK(chromatic_number_exact(gen_bipartite_minus_matching(3))
            .chromatic_number == 2);
  CHECK_THROWS_AS(chromatic_number_exact(Graph(19)), resource_error);

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Graph g = gen_random_graph(8, 0.5, seed);
    ChromaticInfo info = chromatic_number_exact(g);
    CHECK(is_proper(g, info.witness));
    CHECK(info.witness.max_color() == info.chromatic_number);
    CHECK(is_greedy_feasible(g, info.witness));
  }
}

TEST_CASE("chi <= chi_g <= max_degree + 1") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gen_random_graph(7, 0.4, seed);
    int chi = chromatic_number_exact(g).chromatic_number;
    int cg = grundy_number_exact(g);
    CHECK(chi <= cg);
    CHECK(cg <= g.max_degree() + 1);
  }
}

TEST_CASE("grundy_recolor_to_optimal lands on beta within 2*chi*n") {
  Graph g = gen_bipartite_minus_matching(3);
  ChromaticInfo info = chromatic_number_exact(g);
  CHECK(info.chromatic_number == 2);
  int k = grundy_number_exact(g) + 1;  // 4

  Coloring a({1, 2, 3, 1, 2, 3}, k);
  Coloring beta(info.witness.colors(), k);
  RecolorSequence seq = grundy_recolor_to_optimal(g, k, a, beta);
  CHECK(seq.start == a);
  CHECK(validate_sequence(g, seq) == beta);
  CHECK(seq.length() <=
        static_cast<std::size_t>(2 * info.chromatic_number * 6));

  // beta must be optimal and greedy feasible
  Coloring sub({1, 2, 1, 2, 1, 2}, k);  // improper here, rejected anyway
  CHECK_THROWS_AS(grundy_recolor_to_optimal(g, k, a, sub), input_error);
  Coloring wasteful({1, 2, 3, 1, 2, 3}, k);
  CHECK_THROWS_AS(grundy_recolor_to_optimal(g, k, a, wasteful), input_error);
}

TEST_CASE("grundy_recolor joins two colorings within 4*chi_g*n") {
  Graph g = gen_bipartite_minus_matching(3);
  int cg = grundy_number_exact(g);
  int k = cg + 1;
  Coloring a({1, 2, 3, 1, 2, 3}, k);
  Coloring b({2, 2, 2, 1, 1, 1}, k);

  RecolorSequence seq = grundy_recolor(g, k, a, b);
  CHECK(seq.start == a);
  CHECK(validate_sequence(g, seq) == b);
  CHECK(seq.length() <= static_cast<std::size_t>(4 * cg * 6));

  auto dist = oracle_distance(g, k, a, b);
  REQUIRE(dist.has_value());
  CHECK(static_cast<std::size_t>(*dist) <= seq.length());

  CHECK_THROWS_AS(grundy_recolor(g, cg, Coloring({1, 2, 3, 1, 2, 3}, cg),
                                 Coloring({2, 3, 1, 2, 3, 1}, cg)),
                  input_error);
}

TEST_CASE("grundy_recolor handles paths and cycles at chi_g + 1") {
  struct Case {
    Graph g;
    VertexOrder oa;
    VertexOrder ob;
  };
  Case cases[] = {
      {gen_path(5), {{0, 1, 2, 3, 4}}, {{1, 3, 0, 2, 4}}},
      {gen_cycle(6), {{0, 1, 2, 3, 4, 5}}, {{1, 3, 5, 0, 2, 4}}},
  };
  for (const Case& c : cases) {
    int n = c.g.vertex_count();
    int cg = grundy_number_exact(c.g);
    int k = cg + 1;
    Coloring a(greedy_coloring(c.g, c.oa).colors(), k);
    Coloring b(greedy_coloring(c.g, c.ob).colors(), k);
    CHECK(a != b);
    RecolorSequence seq = grundy_recolor(c.g, k, a, b);
    CHECK(validate_sequence(c.g, seq) == b);
    CHECK(seq.length() <= static_cast<std::size_t>(4 * cg * n));
  }
}
