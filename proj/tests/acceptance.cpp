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

// Acceptance gate: eight end-to-end properties, one pass/fail line each.
// Everything is deterministic; seeds are fixed in the schedules below.

#include <cstdint>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rekolor/decomp.hpp"
#include "rekolor/errors.hpp"
#include "rekolor/generators.hpp"
#include "rekolor/graph.hpp"
#include "rekolor/grundy.hpp"
#include "rekolor/oracle.hpp"
#include "rekolor/twrecolor.hpp"

using namespace rekolor;

namespace {

struct Lcg {
  std::uint64_t s;
  std::uint64_t next() {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    return s >> 33;
  }
};

// Random proper coloring in ascending id order. Safe whenever every
// vertex has at most k-2 earlier neighbors, as in our k-tree instances.
std::optional<Coloring> id_order_sample(const Graph& g, int k, Lcg& rng) {
  const int n = g.vertex_count();
  std::vector<int> cols(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::vector<int> free;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && cols[static_cast<std::size_t>(w)] == c) ok = false;
      if (ok) free.push_back(c);
    }
    if (free.empty()) return std::nullopt;
    cols[static_cast<std::size_t>(v)] =
        free[rng.next() % free.size()];
  }
  return Coloring(cols, k);
}

// Random id-order sampling can dead-end on general graphs even when
// k > chi(G); retry, then fall back to a random-order greedy coloring,
// which always fits because chi_g(G) < k here.
Coloring sample_proper(const Graph& g, int k, Lcg& rng) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    auto c = id_order_sample(g, k, rng);
    if (c) return *c;
  }
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(order[static_cast<std::size_t>(i)],
              order[rng.next() % static_cast<std::size_t>(i + 1)]);
  Coloring c = greedy_coloring(g, {order});
  return Coloring(c.colors(), k);
}

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;  // keep the first witness
    pass = false;
  }
};

void check(Criterion& c, bool ok, const std::string& why) {
  if (!ok) c.fail(why);
}

std::string tag(int i, std::uint64_t seed) {
  std::ostringstream os;
  os << "instance " << i << " (seed " << seed << ")";
  return os.str();
}

// Criteria 1 and 2 share the sampled k-tree instances.
void run_tw_instances(Criterion& c1, Criterion& c2) {
  for (int i = 0; i < 200; ++i) {
    int n = 4 + i % 7;
    int width = 1 + i % 3;
    if (width > n - 2) width = n - 2;
    double p = (i / 3) % 3 == 0 ? 0.7 : ((i / 3) % 3 == 1 ? 0.85 : 1.0);
    if (n >= 10 && width >= 3) p = 1.0;
    std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);

    PartialKTree pk = gen_partial_ktree(n, width, p, seed);
    int k = width + 2;
    Lcg rng{seed * 977 + 11};
    auto ao = id_order_sample(pk.graph, k, rng);
    auto bo = id_order_sample(pk.graph, k, rng);
    if (!ao || !bo) {
      c1.fail(tag(i, seed) + ": sampler dead-ended");
      continue;
    }

    RecolorSequence seq = tw_recolor(pk.graph, pk.decomposition, k, *ao, *bo);
    Coloring fin = validate_sequence(pk.graph, seq);
    check(c1, fin == *bo, tag(i, seed) + ": wrong endpoint");
    std::size_t bound = static_cast<std::size_t>(2 * (n * n + n));
    check(c1, seq.length() <= bound,
          tag(i, seed) + ": length " + std::to_string(seq.length()) +
              " exceeds " + std::to_string(bound));
    auto dist = oracle_distance(pk.graph, k, *ao, *bo);
    check(c1, dist.has_value(), tag(i, seed) + ": oracle disconnected");
    if (dist)
      check(c1, static_cast<std::size_t>(*dist) <= seq.length(),
            tag(i, seed) + ": sequence beats the oracle distance");

    for (const Coloring& start : {*ao, *bo}) {
      CoherentResult r =
          make_coherent(pk.graph, pk.decomposition, k, start);
      Coloring end = validate_sequence(pk.graph, r.sequence);
      check(c2, end == r.coherent, tag(i, seed) + ": wrong endpoint");
      check(c2, is_coherent(pk.graph, pk.decomposition, r.coherent),
            tag(i, seed) + ": result not coherent");
      check(c2, r.sequence.length() <= static_cast<std::size_t>(n * n),
            tag(i, seed) + ": sweep length " +
                std::to_string(r.sequence.length()) + " exceeds " +
                std::to_string(n * n));
    }
  }
}

void run_clique_pairs(Criterion& c) {
  for (int n = 2; n <= 4; ++n) {
    int k = n + 1;
    Graph kn = gen_complete(n);

    std::vector<std::vector<int>> all;
    std::vector<int> cur(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int v) -> void {
      if (v == n) {
        all.push_back(cur);
        return;
      }
      for (int col = 1; col <= k; ++col) {
        bool used = false;
        for (int w = 0; w < v; ++w)
          if (cur[static_cast<std::size_t>(w)] == col) used = true;
        if (used) continue;
        cur[static_cast<std::size_t>(v)] = col;
        self(self, v + 1);
      }
    };
    rec(rec, 0);

    for (const auto& av : all) {
      for (const auto& bv : all) {
        Coloring a(av, k);
        Coloring b(bv, k);
        RecolorSequence seq = clique_recolor(n, k, a, b);
        Coloring fin = validate_sequence(kn, seq);
        check(c, fin == b, "clique n=" + std::to_string(n) +
                               ": wrong endpoint");
        for (int cnt : per_vertex_recolor_counts(seq, n))
          check(c, cnt <= 2, "clique n=" + std::to_string(n) +
                                 ": a vertex moved " + std::to_string(cnt) +
                                 " times");
      }
    }
  }
}

void run_grundy_instances(Criterion& c) {
  for (int i = 0; i < 200; ++i) {
    int n = 3 + i % 7;
    double p = (i / 7) % 3 == 0 ? 0.3 : ((i / 7) % 3 == 1 ? 0.5 : 0.7);
    std::uint64_t seed = 9000 + static_cast<std::uint64_t>(i);
    Graph g = gen_random_graph(n, p, seed);

    int cg = grundy_number_exact(g);
    int k = cg + 1;
    ChromaticInfo info = chromatic_number_exact(g);
    Lcg rng{seed * 31 + 7};
    Coloring a = sample_proper(g, k, rng);
    Coloring b = sample_proper(g, k, rng);
    Coloring beta(info.witness.colors(), k);

    std::size_t half_bound =
        static_cast<std::size_t>(2 * info.chromatic_number * n);
    RecolorSequence ha = grundy_recolor_to_optimal(g, k, a, beta);
    RecolorSequence hb = grundy_recolor_to_optimal(g, k, b, beta);
    check(c, validate_sequence(g, ha) == beta,
          tag(i, seed) + ": half misses the optimum");
    check(c, validate_sequence(g, hb) == beta,
          tag(i, seed) + ": half misses the optimum");
    check(c, ha.length() <= half_bound && hb.length() <= half_bound,
          tag(i, seed) + ": a half exceeds 2*chi*n");

    RecolorSequence seq = grundy_recolor(g, k, a, b);
    check(c, validate_sequence(g, seq) == b,
          tag(i, seed) + ": wrong endpoint");
    check(c, seq.length() <= static_cast<std::size_t>(4 * cg * n),
          tag(i, seed) + ": length " + std::to_string(seq.length()) +
              " exceeds 4*chi_g*n");
  }
}

void run_frozen_matchings(Criterion& c) {
  for (int n = 2; n <= 4; ++n) {
    Graph g = gen_bipartite_minus_matching(n);
    std::vector<int> paired(static_cast<std::size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
      paired[static_cast<std::size_t>(i)] = i + 1;
      paired[static_cast<std::size_t>(n + i)] = i + 1;
    }
    check(c, frozen_degree(g, n, Coloring(paired, n)) == 0,
          "n=" + std::to_string(n) + ": paired coloring is not frozen");
  }
  for (int n = 2; n <= 3; ++n) {
    Graph g = gen_bipartite_minus_matching(n);
    check(c, is_k_mixing(g, n + 1) == MixingStatus::kMixing,
          "n=" + std::to_string(n) + ": not mixing at n+1");
    auto probe = mixing_number_probe(g, n + 1);
    check(c, probe.has_value() && *probe == n + 1,
          "n=" + std::to_string(n) + ": mixing number probe is not n+1");
  }
}

void run_complete_families(Criterion& c) {
  for (int i = 0; i < 100; ++i) {
    int n = 4 + i % 7;
    double p = (i / 7) % 3 == 0 ? 0.25 : ((i / 7) % 3 == 1 ? 0.5 : 0.75);
    std::uint64_t seed = 6000 + static_cast<std::uint64_t>(i);
    Graph g = gen_random_graph(n, p, seed);

    TreewidthResult r = treewidth_exact(g);
    int base = r.treewidth < 0 ? 0 : r.treewidth;
    for (int level = base; level <= n - 1; ++level) {
      CompleteTreeDecomposition t =
          make_complete(g, r.decomposition, level);
      DecompositionCheck chk = validate_complete_decomposition(g, t);
      check(c, chk.ok, tag(i, seed) + " level " + std::to_string(level) +
                           ": " + chk.violation);
      if (!chk.ok) continue;

      FamilyPartition fam = family_partition(t);
      check(c, fam.family_count == level + 1,
            tag(i, seed) + ": family count is not level+1");
      for (const auto& bag : t.tree.bags) {
        std::vector<bool> hit(static_cast<std::size_t>(fam.family_count),
                              false);
        bool once = true;
        for (int v : bag) {
          int f = fam.family_of[v];
          if (f < 0 || f >= fam.family_count ||
              hit[static_cast<std::size_t>(f)])
            once = false;
          else
            hit[static_cast<std::size_t>(f)] = true;
        }
        check(c, once, tag(i, seed) + ": a family repeats inside a bag");
      }
      for (const auto& [u, v] : g.edges())
        check(c, fam.family_of[u] != fam.family_of[v],
              tag(i, seed) + ": a family holds an edge");
    }
  }
}

void run_eliminations(Criterion& c) {
  for (int i = 0; i < 100; ++i) {
    int width = 1 + i % 3;
    double p = i % 2 == 0 ? 1.0 : 0.75;
    std::uint64_t seed = 7000 + static_cast<std::uint64_t>(i);
    PartialKTree pk = gen_partial_ktree(9, width, p, seed);
    const Graph& g = pk.graph;
    const CompleteTreeDecomposition& t = pk.decomposition;
    int k = width + 2;

    FamilyPartition fam = family_partition(t);
    int u = i % t.tree.node_count();
    int f = (i / 3) % fam.family_count;

    // family-constant coloring, then the bag-u member of family f takes
    // the spare color; coherent outside B_u with f+1 absent from B_u
    std::vector<int> cols(9);
    for (int v = 0; v < 9; ++v)
      cols[static_cast<std::size_t>(v)] = fam.family_of[v] + 1;
    int x = -1;
    for (int v : t.tree.bags[static_cast<std::size_t>(u)])
      if (fam.family_of[v] == f) x = v;
    if (x < 0) {
      c.fail(tag(i, seed) + ": no family member in the bag");
      continue;
    }
    cols[static_cast<std::size_t>(x)] = k;
    Coloring start(cols, k);
    int a = f + 1;

    RecolorSequence seq = eliminate_color(g, t, u, start, a, k);
    Coloring fin = validate_sequence(g, seq);
    for (int v = 0; v < 9; ++v)
      check(c, fin.color(v) != a,
            tag(i, seed) + ": color survived the elimination");

    std::vector<int> counts = per_vertex_recolor_counts(seq, 9);
    std::vector<bool> in_bag(9, false);
    for (int v : t.tree.bags[static_cast<std::size_t>(u)])
      in_bag[static_cast<std::size_t>(v)] = true;
    std::vector<int> outside;
    for (int v = 0; v < 9; ++v) {
      if (in_bag[static_cast<std::size_t>(v)]) {
        check(c, counts[static_cast<std::size_t>(v)] == 0,
              tag(i, seed) + ": a bag vertex moved");
      } else {
        outside.push_back(v);
        check(c, counts[static_cast<std::size_t>(v)] <= 1,
              tag(i, seed) + ": an outside vertex moved twice");
      }
    }
    check(c, is_coherent(g, t, fin, outside),
          tag(i, seed) + ": outside coherence lost");
  }
}

void run_grundy_crosscheck(Criterion& c) {
  for (int i = 0; i < 50; ++i) {
    int n = 4 + i % 5;
    double p = (i / 5) % 3 == 0 ? 0.3 : ((i / 5) % 3 == 1 ? 0.5 : 0.7);
    std::uint64_t seed = 4000 + static_cast<std::uint64_t>(i);
    Graph g = gen_random_graph(n, p, seed);

    int fast = grundy_number_exact(g);
    int slow = grundy_number_bruteforce(g);
    check(c, fast == slow,
          tag(i, seed) + ": branch-and-bound " + std::to_string(fast) +
              " != brute force " + std::to_string(slow));
    int chi = chromatic_number_exact(g).chromatic_number;
    check(c, chi <= fast && fast <= g.max_degree() + 1,
          tag(i, seed) + ": chi <= chi_g <= max_degree+1 violated");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> cs(8);
  cs[0].name = "tw engine bound";
  cs[1].name = "coherent sweep bound";
  cs[2].name = "clique exchange pairs";
  cs[3].name = "grundy engine bound";
  cs[4].name = "frozen matching colorings";
  cs[5].name = "complete decomposition families";
  cs[6].name = "color elimination";
  cs[7].name = "grundy cross-check";

  auto guarded = [&](int idx, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      cs[static_cast<std::size_t>(idx)].fail(std::string("threw: ") +
                                             e.what());
    }
  };

  try {
    run_tw_instances(cs[0], cs[1]);
  } catch (const std::exception& e) {
    cs[0].fail(std::string("threw: ") + e.what());
    cs[1].fail(std::string("threw: ") + e.what());
  }
  guarded(2, [&] { run_clique_pairs(cs[2]); });
  guarded(3, [&] { run_grundy_instances(cs[3]); });
  guarded(4, [&] { run_frozen_matchings(cs[4]); });
  guarded(5, [&] { run_complete_families(cs[5]); });
  guarded(6, [&] { run_eliminations(cs[6]); });
  guarded(7, [&] { run_grundy_crosscheck(cs[7]); });

  bool all = true;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::cout << (i + 1) << " " << cs[i].name << ": "
              << (cs[i].pass ? "PASS" : "FAIL") << "\n";
    if (!cs[i].pass) {
      all = false;
      std::cerr << "  " << cs[i].detail << "\n";
    }
  }
  return all ? 0 : 1;
}
