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
#include <deque>
#include <numeric>
#include <string>

#include "rekolor/errors.hpp"

namespace rekolor {

namespace {

using detail::check_invariant;

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<int> bag_minus(const std::vector<int>& a,
                           const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool bag_has(const std::vector<int>& bag, int v) {
  return std::binary_search(bag.begin(), bag.end(), v);
}

// A rooted fragment of a tree decomposition, bags carrying vertex ids of
// the full graph. `label` keeps an original node id per local node for
// deterministic ordering and diagnostics.
struct SubDecomp {
  std::vector<std::vector<int>> bags;
  std::vector<std::vector<int>> adj;
  std::vector<int> label;
  int root = 0;

  int size() const { return static_cast<int>(bags.size()); }
};

std::vector<int> fathers_from_root(const SubDecomp& sub) {
  std::vector<int> father(static_cast<std::size_t>(sub.size()), -1);
  std::vector<bool> seen(static_cast<std::size_t>(sub.size()), false);
  std::deque<int> queue{sub.root};
  seen[static_cast<std::size_t>(sub.root)] = true;
  int reached = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    ++reached;
    for (int w : sub.adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        father[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  check_invariant(reached == sub.size(), "disconnected decomposition fragment");
  return father;
}

// Recursive color elimination per the constructive proof. Recolors only
// vertices outside the root bag, each at most once (tracked in
// `touched`), and leaves no vertex of the fragment colored `a`.
void eliminate_impl(const Graph& g, const SubDecomp& sub,
                    const std::vector<int>& palette, int a,
                    std::vector<int>& colors,
                    std::vector<RecolorStep>& steps,
                    std::vector<bool>& touched) {
  const int m = sub.size();
  const auto& root_bag = sub.bags[static_cast<std::size_t>(sub.root)];
  for (int v : root_bag)
    check_invariant(colors[static_cast<std::size_t>(v)] != a,
                    "color to eliminate appears in the root bag");

  // Coherence gives: differently colored parents have a member in the
  // root bag. Checked on entry at every recursion level.
  auto father = fathers_from_root(sub);
  for (int p = 0; p < m; ++p) {
    int q = father[static_cast<std::size_t>(p)];
    if (q < 0) continue;
    auto dp = bag_minus(sub.bags[static_cast<std::size_t>(p)],
                        sub.bags[static_cast<std::size_t>(q)]);
    auto dq = bag_minus(sub.bags[static_cast<std::size_t>(q)],
                        sub.bags[static_cast<std::size_t>(p)]);
    check_invariant(dp.size() == dq.size() && dp.size() <= 1,
                    "fragment is not complete");
    if (dp.empty()) continue;
    check_invariant(colors[static_cast<std::size_t>(dp[0])] ==
                            colors[static_cast<std::size_t>(dq[0])] ||
                        bag_has(root_bag, dp[0]) || bag_has(root_bag, dq[0]),
                    "differently colored parents avoid the root bag");
  }

  auto has_a = [&](int node) {
    for (int v : sub.bags[static_cast<std::size_t>(node)])
      if (colors[static_cast<std::size_t>(v)] == a) return true;
    return false;
  };

  std::vector<int> zone_roots;
  for (int v = 0; v < m; ++v) {
    if (v == sub.root || !has_a(v)) continue;
    int f = father[static_cast<std::size_t>(v)];
    if (!has_a(f)) zone_roots.push_back(v);
  }
  std::sort(zone_roots.begin(), zone_roots.end(), [&](int x, int y) {
    return sub.label[static_cast<std::size_t>(x)] <
           sub.label[static_cast<std::size_t>(y)];
  });

  std::vector<bool> claimed(static_cast<std::size_t>(m), false);
  for (int zr : zone_roots) {
    // Zone: the full subtree rooted at zr. Disjointness of zones first.
    std::vector<int> zone;
    std::deque<int> queue{zr};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      check_invariant(!claimed[static_cast<std::size_t>(v)],
                      "overlapping elimination zones");
      claimed[static_cast<std::size_t>(v)] = true;
      zone.push_back(v);
      for (int w : sub.adj[static_cast<std::size_t>(v)])
        if (w != father[static_cast<std::size_t>(v)]) queue.push_back(w);
    }

    // Everywhere-claim: once a enters a subtree it is in every bag, and
    // by coherence exactly once per bag.
    std::vector<int> carrier(static_cast<std::size_t>(m), -1);
    for (int v : zone) {
      int hits = 0;
      for (int x : sub.bags[static_cast<std::size_t>(v)])
        if (colors[static_cast<std::size_t>(x)] == a) {
          carrier[static_cast<std::size_t>(v)] = x;
          ++hits;
        }
      check_invariant(hits == 1,
                      "zone bag does not hold exactly one eliminated-color "
                      "vertex");
    }

    // Replacement color: smallest palette color absent from the zone
    // root's bag.
    int b = -1;
    for (int cand : palette) {
      bool used = false;
      for (int x : sub.bags[static_cast<std::size_t>(zr)])
        if (colors[static_cast<std::size_t>(x)] == cand) {
          used = true;
          break;
        }
      if (!used) {
        b = cand;
        break;
      }
    }
    check_invariant(b != -1, "no palette color free in the zone root bag");

    // Child fragment: strip each bag's carrier, then contract edges whose
    // bags became equal.
    std::vector<bool> in_zone(static_cast<std::size_t>(m), false);
    for (int v : zone) in_zone[static_cast<std::size_t>(v)] = true;
    std::vector<std::vector<int>> stripped(static_cast<std::size_t>(m));
    for (int v : zone) {
      stripped[static_cast<std::size_t>(v)] =
          sub.bags[static_cast<std::size_t>(v)];
      auto& bag = stripped[static_cast<std::size_t>(v)];
      bag.erase(std::remove(bag.begin(), bag.end(),
                            carrier[static_cast<std::size_t>(v)]),
                bag.end());
    }
    SubDecomp child;
    std::vector<int> cls(static_cast<std::size_t>(m), -1);
    for (int v : zone) {
      if (cls[static_cast<std::size_t>(v)] != -1) continue;
      // Flood the equal-bag class of v inside the zone.
      int id = child.size();
      cls[static_cast<std::size_t>(v)] = id;
      std::deque<int> flood{v};
      while (!flood.empty()) {
        int p = flood.front();
        flood.pop_front();
        for (int q : sub.adj[static_cast<std::size_t>(p)])
          if (in_zone[static_cast<std::size_t>(q)] &&
              cls[static_cast<std::size_t>(q)] == -1 &&
              stripped[static_cast<std::size_t>(q)] ==
                  stripped[static_cast<std::size_t>(p)]) {
            cls[static_cast<std::size_t>(q)] = id;
            flood.push_back(q);
          }
      }
      child.bags.push_back(stripped[static_cast<std::size_t>(v)]);
      child.label.push_back(sub.label[static_cast<std::size_t>(v)]);
    }
    child.adj.assign(static_cast<std::size_t>(child.size()), {});
    for (int v : zone)
      for (int w : sub.adj[static_cast<std::size_t>(v)]) {
        if (v >= w || !in_zone[static_cast<std::size_t>(w)]) continue;
        int cv = cls[static_cast<std::size_t>(v)];
        int cw = cls[static_cast<std::size_t>(w)];
        if (cv == cw) continue;
        child.adj[static_cast<std::size_t>(cv)].push_back(cw);
        child.adj[static_cast<std::size_t>(cw)].push_back(cv);
      }
    child.root = cls[static_cast<std::size_t>(zr)];

    eliminate_impl(g, child, bag_minus(palette, {a}), b, colors, steps,
                   touched);

    // Spray the carriers to b, ascending vertex id. Carriers form a
    // stable set (one per bag), so the order is immaterial.
    std::vector<int> sprayed;
    for (int v : zone) sprayed.push_back(carrier[static_cast<std::size_t>(v)]);
    sprayed = sorted_unique(sprayed);
    for (int x : sprayed) {
      check_invariant(!touched[static_cast<std::size_t>(x)],
                      "vertex recolored twice during elimination");
      touched[static_cast<std::size_t>(x)] = true;
      detail::apply_step_checked(g, colors, x, b);
      steps.push_back({x, b});
    }
  }

  for (int v = 0; v < m; ++v)
    check_invariant(!has_a(v), "eliminated color survived");
}

}  // namespace

std::vector<BlockingArc> clique_blocking_arcs(const Coloring& current,
                                              const Coloring& target) {
  if (current.size() != target.size())
    throw input_error("blocking digraph needs colorings of equal size");
  std::vector<BlockingArc> arcs;
  const int n = current.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && target.color(x) == current.color(y))
        arcs.push_back({x, y});
  return arcs;
}

RecolorSequence clique_recolor(int clique_size, int k, const Coloring& a,
                               const Coloring& b) {
  const int n = clique_size;
  if (n < 0) throw input_error("negative clique size");
  if (k <= n)
    throw input_error("clique recoloring needs k >= n+1, got k = " +
                      std::to_string(k) + " for n = " + std::to_string(n));
  if (a.size() != n || b.size() != n)
    throw input_error("colorings do not match the clique size");
  if (a.palette_size() > k || b.palette_size() > k || a.max_color() > k ||
      b.max_color() > k)
    throw input_error("colorings exceed the palette");
  auto injective = [&](const Coloring& c) {
    auto v = c.colors();
    return sorted_unique(v).size() == static_cast<std::size_t>(n);
  };
  if (!injective(a) || !injective(b))
    throw input_error("clique colorings must use pairwise distinct colors");

  Graph clique(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) clique.add_edge(u, v);

  RecolorSequence seq{Coloring(a.colors(), k), {}};
  std::vector<int> colors = a.colors();
  const std::vector<int>& target = b.colors();

  auto out_arc = [&](int x) {
    // y holding x's target color, if any; colors are injective throughout.
    for (int y = 0; y < n; ++y)
      if (y != x && colors[static_cast<std::size_t>(y)] ==
                        target[static_cast<std::size_t>(x)])
        return y;
    return -1;
  };

  // Break every circuit of the blocking digraph. Breaking one never
  // creates another, so the count strictly decreases.
  for (;;) {
    std::vector<int> state(static_cast<std::size_t>(n), 0);
    int break_vertex = -1;
    for (int s = 0; s < n && break_vertex == -1; ++s) {
      if (state[static_cast<std::size_t>(s)] != 0) continue;
      std::vector<int> path;
      int x = s;
      while (x != -1 && state[static_cast<std::size_t>(x)] == 0) {
        state[static_cast<std::size_t>(x)] = 1;
        path.push_back(x);
        x = out_arc(x);
      }
      if (x != -1 && state[static_cast<std::size_t>(x)] == 1) {
        // Circuit: the tail of `path` from x on. Break at its smallest id.
        auto it = std::find(path.begin(), path.end(), x);
        break_vertex = *std::min_element(it, path.end());
      }
      for (int v : path) state[static_cast<std::size_t>(v)] = 2;
    }
    if (break_vertex == -1) break;
    int free_color = -1;
    for (int c = 1; c <= k; ++c)
      if (std::find(colors.begin(), colors.end(), c) == colors.end()) {
        free_color = c;
        break;
      }
    check_invariant(free_color != -1, "no free color in the clique");
    detail::apply_step_checked(clique, colors, break_vertex, free_color);
    seq.steps.push_back({break_vertex, free_color});
  }

  // Settle vertices whose target color is free, smallest id first.
  for (;;) {
    int pick = -1;
    for (int x = 0; x < n; ++x)
      if (colors[static_cast<std::size_t>(x)] !=
              target[static_cast<std::size_t>(x)] &&
          out_arc(x) == -1) {
        pick = x;
        break;
      }
    if (pick == -1) break;
    detail::apply_step_checked(clique, colors, pick,
                               target[static_cast<std::size_t>(pick)]);
    seq.steps.push_back({pick, target[static_cast<std::size_t>(pick)]});
  }
  check_invariant(colors == target, "clique recoloring stalled");

  auto counts = per_vertex_recolor_counts(seq, n);
  for (int v = 0; v < n; ++v)
    check_invariant(counts[static_cast<std::size_t>(v)] <= 2,
                    "clique vertex recolored more than twice");
  return seq;
}

Graph merge_families(const Graph& g, const FamilyPartition& p) {
  const int n = g.vertex_count();
  if (static_cast<int>(p.family_of.size()) < n)
    throw input_error("family partition does not cover the graph");
  for (int v = 0; v < n; ++v) {
    int f = p.family_of[static_cast<std::size_t>(v)];
    if (f < 0 || f >= p.family_count)
      throw input_error("vertex " + std::to_string(v) +
                        " has no valid family");
  }
  Graph merged(p.family_count);
  for (const auto& [u, v] : g.edges()) {
    int fu = p.family_of[static_cast<std::size_t>(u)];
    int fv = p.family_of[static_cast<std::size_t>(v)];
    if (fu == fv)
      throw input_error("family of vertex " + std::to_string(u) +
                        " is not a stable set (edge {" + std::to_string(u) +
                        "," + std::to_string(v) + "})");
    merged.add_edge(fu, fv);
  }
  return merged;
}

Coloring merge_coloring(const FamilyPartition& p, const Coloring& c) {
  std::vector<int> merged(static_cast<std::size_t>(p.family_count), 0);
  for (int v = 0; v < c.size(); ++v) {
    int f = p.family_of[static_cast<std::size_t>(v)];
    if (f < 0 || f >= p.family_count)
      throw input_error("vertex " + std::to_string(v) +
                        " has no valid family");
    int& slot = merged[static_cast<std::size_t>(f)];
    if (slot == 0)
      slot = c.color(v);
    else if (slot != c.color(v))
      throw input_error("coloring is not family-constant on family " +
                        std::to_string(f));
  }
  for (int f = 0; f < p.family_count; ++f)
    if (merged[static_cast<std::size_t>(f)] == 0)
      throw input_error("family " + std::to_string(f) + " has no members");
  return Coloring(std::move(merged), c.palette_size());
}

Coloring extend_coloring(const FamilyPartition& p, const Coloring& merged,
                         int n) {
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int f = p.family_of[static_cast<std::size_t>(v)];
    if (f < 0 || f >= p.family_count)
      throw input_error("vertex " + std::to_string(v) +
                        " has no valid family");
    colors[static_cast<std::size_t>(v)] = merged.color(f);
  }
  return Coloring(std::move(colors), merged.palette_size());
}

RecolorSequence lift_sequence(const Graph& g, const FamilyPartition& p,
                              const RecolorSequence& merged_seq) {
  Graph merged = merge_families(g, p);
  validate_sequence(merged, merged_seq);

  const int n = g.vertex_count();
  std::vector<std::vector<int>> members(
      static_cast<std::size_t>(p.family_count));
  for (int v = 0; v < n; ++v)
    members[static_cast<std::size_t>(p.family_of[static_cast<std::size_t>(v)])]
        .push_back(v);

  RecolorSequence out{extend_coloring(p, merged_seq.start, n), {}};
  std::vector<int> colors = out.start.colors();
  for (const auto& step : merged_seq.steps)
    for (int v : members[static_cast<std::size_t>(step.vertex)]) {
      detail::apply_step_checked(g, colors, v, step.new_color);
      out.steps.push_back({v, step.new_color});
    }
  return out;
}

RecolorSequence eliminate_color(const Graph& g,
                                const CompleteTreeDecomposition& t, int u,
                                const Coloring& c, int a, int k) {
  require_complete_decomposition(g, t);
  const int n = g.vertex_count();
  if (u < 0 || u >= t.tree.node_count())
    throw input_error("node " + std::to_string(u) + " is out of range");
  if (k < t.level + 2)
    throw input_error("color elimination needs k >= level+2 = " +
                      std::to_string(t.level + 2) + ", got k = " +
                      std::to_string(k));
  if (a < 1 || a > k)
    throw input_error("color " + std::to_string(a) +
                      " is outside the palette");
  if (c.size() != n || c.max_color() > k)
    throw input_error("coloring does not fit the graph and palette");
  const auto& root_bag = t.tree.bags[static_cast<std::size_t>(u)];
  for (int v : root_bag)
    if (c.color(v) == a)
      throw input_error("color " + std::to_string(a) +
                        " appears in bag " + std::to_string(u) +
                        " at vertex " + std::to_string(v));
  std::vector<int> outside;
  for (int v = 0; v < n; ++v)
    if (!bag_has(root_bag, v)) outside.push_back(v);
  if (!is_coherent(g, t, c, outside))
    throw input_error("coloring is not coherent outside bag " +
                      std::to_string(u));

  SubDecomp whole;
  whole.bags = t.tree.bags;
  whole.label.resize(static_cast<std::size_t>(t.tree.node_count()));
  std::iota(whole.label.begin(), whole.label.end(), 0);
  whole.adj.assign(static_cast<std::size_t>(t.tree.node_count()), {});
  for (const auto& [x, y] : t.tree.edges) {
    whole.adj[static_cast<std::size_t>(x)].push_back(y);
    whole.adj[static_cast<std::size_t>(y)].push_back(x);
  }
  whole.root = u;

  std::vector<int> palette(static_cast<std::size_t>(k));
  std::iota(palette.begin(), palette.end(), 1);
  std::vector<int> colors = c.colors();
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  RecolorSequence seq{c, {}};
  eliminate_impl(g, whole, palette, a, colors, seq.steps, touched);

  for (int v = 0; v < n; ++v) {
    check_invariant(colors[static_cast<std::size_t>(v)] != a,
                    "eliminated color survived");
    if (touched[static_cast<std::size_t>(v)])
      check_invariant(!bag_has(root_bag, v),
                      "a root bag vertex was recolored");
  }
  Coloring result(colors, k);
  check_invariant(is_coherent(g, t, result, outside),
                  "elimination broke coherence");
  return seq;
}

CoherentResult make_coherent(const Graph& g,
                             const CompleteTreeDecomposition& t, int k,
                             const Coloring& a) {
  require_complete_decomposition(g, t);
  const int n = g.vertex_count();
  const int level = t.level;
  if (k < level + 2)
    throw input_error("coherence sweep needs k >= level+2 = " +
                      std::to_string(level + 2) + ", got k = " +
                      std::to_string(k));
  if (a.size() != n || a.max_color() > k)
    throw input_error("coloring does not fit the graph and palette");
  if (!is_proper(g, a)) throw input_error("coloring is not proper");
  if (n == 0 || is_coherent(g, t, a)) return CoherentResult{{a, {}}, a};

  const int node_count = t.tree.node_count();
  std::vector<std::vector<int>> node_adj(
      static_cast<std::size_t>(node_count));
  for (const auto& [x, y] : t.tree.edges) {
    node_adj[static_cast<std::size_t>(x)].push_back(y);
    node_adj[static_cast<std::size_t>(y)].push_back(x);
  }

  FamilyPartition fam = family_partition(t);
  // Direct parent pairs, for spraying a treated family stretch.
  std::vector<std::vector<int>> parent_adj(static_cast<std::size_t>(n));
  for (const auto& [x, y] : t.tree.edges) {
    auto dx = bag_minus(t.tree.bags[static_cast<std::size_t>(x)],
                        t.tree.bags[static_cast<std::size_t>(y)]);
    auto dy = bag_minus(t.tree.bags[static_cast<std::size_t>(y)],
                        t.tree.bags[static_cast<std::size_t>(x)]);
    parent_adj[static_cast<std::size_t>(dx[0])].push_back(dy[0]);
    parent_adj[static_cast<std::size_t>(dy[0])].push_back(dx[0]);
  }

  // Group bookkeeping: each alive node of the restricted decomposition is
  // a cluster of original nodes represented by the node whose bag carries
  // the cluster's untreated vertices.
  std::vector<std::vector<int>> group(static_cast<std::size_t>(node_count));
  std::vector<bool> alive(static_cast<std::size_t>(node_count), true);
  std::vector<std::vector<int>> cur_adj = node_adj;
  for (int w = 0; w < node_count; ++w)
    group[static_cast<std::size_t>(w)] = {w};

  std::vector<bool> treated(static_cast<std::size_t>(n), false);
  std::vector<int> treated_list;
  std::vector<int> colors = a.colors();
  RecolorSequence seq{a, {}};

  std::vector<int> palette(static_cast<std::size_t>(k));
  std::iota(palette.begin(), palette.end(), 1);

  auto restricted_bag = [&](int rep) {
    std::vector<int> bag;
    for (int v : t.tree.bags[static_cast<std::size_t>(rep)])
      if (!treated[static_cast<std::size_t>(v)]) bag.push_back(v);
    return bag;
  };

  for (int i = 1; i <= n; ++i) {
    std::vector<int> reps;
    for (int w = 0; w < node_count; ++w)
      if (alive[static_cast<std::size_t>(w)]) reps.push_back(w);
    check_invariant(!reps.empty(), "no alive decomposition node");

    int u = -1;
    int x = -1;
    if (reps.size() == 1) {
      u = reps[0];
      auto bag = restricted_bag(u);
      check_invariant(static_cast<int>(bag.size()) == n - (i - 1),
                      "endgame bag does not carry all untreated vertices");
      x = bag[0];
    } else {
      for (int w : reps)
        if (cur_adj[static_cast<std::size_t>(w)].size() == 1) {
          u = w;
          break;
        }
      check_invariant(u != -1, "restricted tree has no leaf");
      int f = cur_adj[static_cast<std::size_t>(u)][0];
      auto priv = bag_minus(restricted_bag(u), restricted_bag(f));
      check_invariant(priv.size() == 1,
                      "restricted leaf does not exchange one vertex");
      x = priv[0];
    }

    // Residual structure: u's cluster with original bags, rooted at u.
    SubDecomp star;
    const auto& cluster = group[static_cast<std::size_t>(u)];
    std::vector<int> local_of(static_cast<std::size_t>(node_count), -1);
    for (int w : cluster) {
      local_of[static_cast<std::size_t>(w)] = star.size();
      star.bags.push_back(t.tree.bags[static_cast<std::size_t>(w)]);
      star.label.push_back(w);
    }
    star.adj.assign(static_cast<std::size_t>(star.size()), {});
    for (int w : cluster)
      for (int z : node_adj[static_cast<std::size_t>(w)]) {
        int lw = local_of[static_cast<std::size_t>(w)];
        int lz = local_of[static_cast<std::size_t>(z)];
        if (lz == -1 || lw > lz) continue;
        star.adj[static_cast<std::size_t>(lw)].push_back(lz);
        star.adj[static_cast<std::size_t>(lz)].push_back(lw);
      }
    star.root = local_of[static_cast<std::size_t>(u)];

    int a_star = -1;
    for (int cand : palette) {
      bool used = false;
      for (int v : t.tree.bags[static_cast<std::size_t>(u)])
        if (colors[static_cast<std::size_t>(v)] == cand) {
          used = true;
          break;
        }
      if (!used) {
        a_star = cand;
        break;
      }
    }
    check_invariant(a_star != -1, "no free color for the treatment step");

    std::vector<bool> touched(static_cast<std::size_t>(n), false);
    std::size_t before = seq.steps.size();
    eliminate_impl(g, star, palette, a_star, colors, seq.steps, touched);
    for (int v = 0; v < n; ++v)
      if (touched[static_cast<std::size_t>(v)])
        check_invariant(treated[static_cast<std::size_t>(v)],
                        "elimination touched an untreated vertex");
    check_invariant(!touched[static_cast<std::size_t>(x)],
                    "the treated vertex was recolored during elimination");

    // Spray x and the treated stretch of its family reachable through
    // treated vertices, ascending.
    std::vector<int> spray{x};
    std::deque<int> queue{x};
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    seen[static_cast<std::size_t>(x)] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : parent_adj[static_cast<std::size_t>(v)])
        if (!seen[static_cast<std::size_t>(w)] &&
            treated[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          spray.push_back(w);
          queue.push_back(w);
        }
    }
    std::sort(spray.begin(), spray.end());
    for (int v : spray) {
      check_invariant(
          fam.family_of[static_cast<std::size_t>(v)] ==
              fam.family_of[static_cast<std::size_t>(x)],
          "spray left the treated vertex's family");
      if (colors[static_cast<std::size_t>(v)] == a_star) continue;
      detail::apply_step_checked(g, colors, v, a_star);
      seq.steps.push_back({v, a_star});
    }

    treated[static_cast<std::size_t>(x)] = true;
    treated_list.push_back(x);

    // Per-step recoloring bounds: members of the new treated set only,
    // nobody more than twice, the new vertex at most once.
    std::vector<int> step_counts(static_cast<std::size_t>(n), 0);
    for (std::size_t s = before; s < seq.steps.size(); ++s)
      ++step_counts[static_cast<std::size_t>(seq.steps[s].vertex)];
    for (int v = 0; v < n; ++v) {
      check_invariant(step_counts[static_cast<std::size_t>(v)] == 0 ||
                          treated[static_cast<std::size_t>(v)],
                      "treatment step recolored an untreated vertex");
      check_invariant(step_counts[static_cast<std::size_t>(v)] <= 2,
                      "treatment step recolored a vertex thrice");
    }
    check_invariant(step_counts[static_cast<std::size_t>(x)] <= 1,
                    "new treated vertex recolored more than once");

    // Merge the leaf cluster into its father once its bag nests.
    if (reps.size() > 1) {
      int f = cur_adj[static_cast<std::size_t>(u)][0];
      auto moved = group[static_cast<std::size_t>(u)];
      auto& target = group[static_cast<std::size_t>(f)];
      target.insert(target.end(), moved.begin(), moved.end());
      alive[static_cast<std::size_t>(u)] = false;
      auto& fa = cur_adj[static_cast<std::size_t>(f)];
      fa.erase(std::remove(fa.begin(), fa.end(), u), fa.end());
      cur_adj[static_cast<std::size_t>(u)].clear();
    }

    // Restricted-decomposition invariant: our cluster view matches a
    // from-scratch restriction, and it stays complete and valid for the
    // untreated remainder.
    TreeDecomposition fresh = restrict_decomposition(t, treated_list);
    std::vector<std::vector<int>> mine;
    for (int w = 0; w < node_count; ++w)
      if (alive[static_cast<std::size_t>(w)])
        mine.push_back(restricted_bag(w));
    std::vector<std::vector<int>> theirs = fresh.bags;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    check_invariant(mine == theirs,
                    "cluster view diverged from the restriction");
    if (i < n) {
      std::vector<int> keep;
      for (int v = 0; v < n; ++v)
        if (!treated[static_cast<std::size_t>(v)]) keep.push_back(v);
      std::vector<int> local(static_cast<std::size_t>(n), -1);
      for (std::size_t idx = 0; idx < keep.size(); ++idx)
        local[static_cast<std::size_t>(keep[idx])] = static_cast<int>(idx);
      TreeDecomposition mapped = fresh;
      for (auto& bag : mapped.bags)
        for (int& v : bag) v = local[static_cast<std::size_t>(v)];
      int want = std::min(level, static_cast<int>(keep.size()) - 1);
      auto check = validate_complete_decomposition(
          g.induced(keep), CompleteTreeDecomposition{mapped, want});
      check_invariant(check.ok, "restriction lost completeness");
    }

    check_invariant(static_cast<int>(treated_list.size()) == i,
                    "treated set size drifted");
    check_invariant(is_coherent(g, t, Coloring(colors, k), treated_list),
                    "treated set lost coherence");
  }

  Coloring gamma(colors, k);
  check_invariant(is_coherent(g, t, gamma), "sweep did not reach coherence");
  check_invariant(seq.steps.size() <=
                      static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                  "coherence sweep exceeded its quadratic bound");
  validate_sequence(g, seq);
  return CoherentResult{std::move(seq), std::move(gamma)};
}

RecolorSequence tw_recolor(const Graph& g,
                           const CompleteTreeDecomposition& t, int k,
                           const Coloring& a, const Coloring& b) {
  require_complete_decomposition(g, t);
  const int n = g.vertex_count();
  if (k < t.level + 2)
    throw input_error("treewidth recoloring needs k >= level+2 = " +
                      std::to_string(t.level + 2) + ", got k = " +
                      std::to_string(k));
  for (const Coloring* c : {&a, &b}) {
    if (c->size() != n || c->max_color() > k)
      throw input_error("coloring does not fit the graph and palette");
    if (!is_proper(g, *c)) throw input_error("coloring is not proper");
  }
  if (a == b) return RecolorSequence{a, {}};

  CoherentResult ca = make_coherent(g, t, k, a);
  CoherentResult cb = make_coherent(g, t, k, b);

  FamilyPartition fam = family_partition(t);
  Coloring ma = merge_coloring(fam, ca.coherent);
  Coloring mb = merge_coloring(fam, cb.coherent);
  RecolorSequence bridge =
      lift_sequence(g, fam, clique_recolor(fam.family_count, k, ma, mb));

  RecolorSequence total = concat_sequences(g, ca.sequence, bridge);
  total = concat_sequences(g, total,
                           reversed_sequence(g, cb.sequence));
  check_invariant(
      total.steps.size() <=
          2 * (static_cast<std::size_t>(n) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(n)),
      "engine exceeded its quadratic bound");
  Coloring end = validate_sequence(g, total);
  check_invariant(end == b, "engine did not reach the target coloring");
  return total;
}

}  // namespace rekolor
