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

#include "rekolor/decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>

namespace rekolor {

namespace {

bool contains_all(const std::vector<int>& big, const std::vector<int>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<int> bag_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

std::vector<std::vector<int>> tree_adjacency(const TreeDecomposition& t) {
  std::vector<std::vector<int>> adj(
      static_cast<std::size_t>(t.node_count()));
  for (const auto& [a, b] : t.edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// Contracts, to a fixpoint, edges whose endpoint bags are nested; the
// superset endpoint survives. Deterministic: repeatedly the lowest
// absorbable node goes first. Surviving nodes are renumbered compactly
// in ascending old-id order.
TreeDecomposition contract_nested(std::vector<std::vector<int>> bags,
                                  std::vector<std::vector<int>> adj) {
  const std::size_t m = bags.size();
  std::vector<bool> alive(m, true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < m && !changed; ++p) {
      if (!alive[p]) continue;
      for (int qi : adj[p]) {
        auto q = static_cast<std::size_t>(qi);
        if (!alive[q]) continue;
        if (!contains_all(bags[q], bags[p])) continue;
        // merge p into q
        alive[p] = false;
        for (int r : adj[p]) {
          auto rr = static_cast<std::size_t>(r);
          if (rr == q || !alive[rr]) continue;
          adj[rr].push_back(static_cast<int>(q));
          adj[q].push_back(r);
        }
        for (auto& nb : adj) {
          std::sort(nb.begin(), nb.end());
          nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        changed = true;
        break;
      }
    }
  }
  std::vector<int> new_id(m, -1);
  TreeDecomposition out;
  for (std::size_t i = 0; i < m; ++i)
    if (alive[i]) {
      new_id[i] = out.node_count();
      out.bags.push_back(bags[i]);
    }
  for (std::size_t i = 0; i < m; ++i) {
    if (!alive[i]) continue;
    for (int j : adj[i]) {
      auto jj = static_cast<std::size_t>(j);
      if (!alive[jj] || jj <= i) continue;
      out.edges.emplace_back(new_id[i], new_id[jj]);
    }
  }
  return out;
}

}  // namespace

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& bag : bags)
    w = std::max(w, static_cast<int>(bag.size()) - 1);
  return w;
}

DecompositionCheck validate_tree_decomposition(const Graph& g,
                                               const TreeDecomposition& t) {
  const int n = g.vertex_count();
  const int nodes = t.node_count();
  auto fail = [](std::string why) {
    return DecompositionCheck{false, -1, std::move(why)};
  };

  for (int u = 0; u < nodes; ++u) {
    const auto& bag = t.bags[static_cast<std::size_t>(u)];
    if (!std::is_sorted(bag.begin(), bag.end()) ||
        std::adjacent_find(bag.begin(), bag.end()) != bag.end())
      return fail("bag of node " + std::to_string(u) +
                  " is not sorted and duplicate-free");
    for (int v : bag)
      if (v < 0 || v >= n)
        return fail("bag of node " + std::to_string(u) +
                    " mentions out-of-range vertex " + std::to_string(v));
  }
  if (static_cast<int>(t.edges.size()) != std::max(0, nodes - 1))
    return fail("tree shape: expected " +
                std::to_string(std::max(0, nodes - 1)) + " edges, got " +
                std::to_string(t.edges.size()));
  for (const auto& [a, b] : t.edges) {
    if (a < 0 || a >= nodes || b < 0 || b >= nodes)
      return fail("tree edge endpoint out of range");
    if (a == b) return fail("tree self-loop at node " + std::to_string(a));
  }
  if (nodes > 0) {
    auto adj = tree_adjacency(t);
    std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          ++reached;
          queue.push_back(v);
        }
    }
    if (reached != nodes)
      return fail("tree shape: nodes are not connected");
  }

  std::vector<std::vector<int>> occurrence(static_cast<std::size_t>(n));
  for (int u = 0; u < nodes; ++u)
    for (int v : t.bags[static_cast<std::size_t>(u)])
      occurrence[static_cast<std::size_t>(v)].push_back(u);
  for (int v = 0; v < n; ++v)
    if (occurrence[static_cast<std::size_t>(v)].empty())
      return fail("vertex axiom: vertex " + std::to_string(v) +
                  " appears in no bag");
  for (const auto& [x, y] : g.edges()) {
    bool covered = false;
    for (int u : occurrence[static_cast<std::size_t>(x)])
      if (std::binary_search(t.bags[static_cast<std::size_t>(u)].begin(),
                             t.bags[static_cast<std::size_t>(u)].end(), y)) {
        covered = true;
        break;
      }
    if (!covered)
      return fail("edge axiom: edge {" + std::to_string(x) + "," +
                  std::to_string(y) + "} is in no bag");
  }
  if (nodes > 0) {
    auto adj = tree_adjacency(t);
    for (int v = 0; v < n; ++v) {
      const auto& occ = occurrence[static_cast<std::size_t>(v)];
      std::vector<bool> in_occ(static_cast<std::size_t>(nodes), false);
      for (int u : occ) in_occ[static_cast<std::size_t>(u)] = true;
      std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
      std::deque<int> queue{occ[0]};
      seen[static_cast<std::size_t>(occ[0])] = true;
      std::size_t reached = 1;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : adj[static_cast<std::size_t>(u)]) {
          auto ww = static_cast<std::size_t>(w);
          if (in_occ[ww] && !seen[ww]) {
            seen[ww] = true;
            ++reached;
            queue.push_back(w);
          }
        }
      }
      if (reached != occ.size())
        return fail("subtree axiom: occurrence of vertex " +
                    std::to_string(v) + " is disconnected");
    }
  }
  return DecompositionCheck{true, t.width(), ""};
}

void require_tree_decomposition(const Graph& g, const TreeDecomposition& t) {
  auto check = validate_tree_decomposition(g, t);
  if (!check.ok)
    throw input_error("invalid tree decomposition: " + check.violation);
}

DecompositionCheck validate_complete_decomposition(
    const Graph& g, const CompleteTreeDecomposition& t) {
  auto base = validate_tree_decomposition(g, t.tree);
  if (!base.ok) return base;
  auto fail = [](std::string why) {
    return DecompositionCheck{false, -1, std::move(why)};
  };
  if (t.level < 0) return fail("negative level");
  for (int u = 0; u < t.tree.node_count(); ++u)
    if (static_cast<int>(t.tree.bags[static_cast<std::size_t>(u)].size()) !=
        t.level + 1)
      return fail("completeness: bag of node " + std::to_string(u) +
                  " has size " +
                  std::to_string(
                      t.tree.bags[static_cast<std::size_t>(u)].size()) +
                  ", expected " + std::to_string(t.level + 1));
  for (const auto& [a, b] : t.tree.edges) {
    auto diff = bag_difference(t.tree.bags[static_cast<std::size_t>(a)],
                               t.tree.bags[static_cast<std::size_t>(b)]);
    if (diff.size() != 1)
      return fail("completeness: adjacent bags " + std::to_string(a) +
                  "," + std::to_string(b) + " exchange " +
                  std::to_string(diff.size()) + " vertices, expected 1");
  }
  return DecompositionCheck{true, t.level, ""};
}

void require_complete_decomposition(const Graph& g,
                                    const CompleteTreeDecomposition& t) {
  auto check = validate_complete_decomposition(g, t);
  if (!check.ok)
    throw input_error("invalid complete tree decomposition: " +
                      check.violation);
}

bool is_minimal(const TreeDecomposition& t) {
  for (int a = 0; a < t.node_count(); ++a)
    for (int b = 0; b < t.node_count(); ++b)
      if (a != b && contains_all(t.bags[static_cast<std::size_t>(b)],
                                 t.bags[static_cast<std::size_t>(a)]))
        return false;
  return true;
}

TreeDecomposition minimalize(const TreeDecomposition& t) {
  auto adj = tree_adjacency(t);
  return contract_nested(t.bags, std::move(adj));
}

TreeDecomposition restrict_decomposition(const TreeDecomposition& t,
                                         const std::vector<int>& removed) {
  std::vector<int> sorted = removed;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<int>> bags = t.bags;
  for (auto& bag : bags)
    bag.erase(std::remove_if(bag.begin(), bag.end(),
                             [&](int v) {
                               return std::binary_search(sorted.begin(),
                                                         sorted.end(), v);
                             }),
              bag.end());
  return contract_nested(std::move(bags), tree_adjacency(t));
}

TreeDecomposition restrict_decomposition(const CompleteTreeDecomposition& t,
                                         const std::vector<int>& removed) {
  return restrict_decomposition(t.tree, removed);
}

TreewidthResult treewidth_exact(const Graph& g, int guard_max_n) {
  const int n = g.vertex_count();
  if (n > guard_max_n)
    throw resource_error("exact treewidth is guarded at n <= " +
                         std::to_string(guard_max_n) + ", got n = " +
                         std::to_string(n));
  if (n > 24)
    throw resource_error("exact treewidth subset DP is capped at n <= 24");
  if (n == 0) return TreewidthResult{-1, {}};

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= 1u << v;
    adj[static_cast<std::size_t>(v)] |= 1u << u;
  }
  const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;

  // q(S, v): vertices outside S+{v} reachable from v through S.
  auto q_cost = [&](std::uint32_t s, int v) -> int {
    std::uint32_t reach = 1u << v;
    std::uint32_t frontier = reach;
    std::uint32_t seen_nb = 0;
    while (frontier) {
      std::uint32_t nb = 0;
      std::uint32_t f = frontier;
      while (f) {
        int w = std::countr_zero(f);
        f &= f - 1;
        nb |= adj[static_cast<std::size_t>(w)];
      }
      seen_nb |= nb;
      frontier = nb & s & ~reach;
      reach |= frontier;
    }
    return std::popcount(seen_nb & ~s & ~(1u << v));
  };

  // F[S] = 1 + (min over elimination prefixes S of the max q along the
  // way); F[0] = 0 encodes the empty prefix.
  std::vector<std::uint8_t> F(static_cast<std::size_t>(full) + 1, 0);
  std::vector<std::int8_t> pick(static_cast<std::size_t>(full) + 1, -1);
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = 255;
    int best_v = -1;
    std::uint32_t bits = s;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      std::uint32_t rest = s & ~(1u << v);
      int cand = std::max<int>(F[rest], q_cost(rest, v) + 1);
      if (cand < best) {
        best = cand;
        best_v = v;
      }
    }
    F[s] = static_cast<std::uint8_t>(best);
    pick[s] = static_cast<std::int8_t>(best_v);
    if (s == full) break;
  }

  const int tw = F[full] - 1;

  // Reconstruct the elimination order (first eliminated first).
  std::vector<int> order(static_cast<std::size_t>(n));
  std::uint32_t s = full;
  for (int i = n - 1; i >= 0; --i) {
    int v = pick[s];
    order[static_cast<std::size_t>(i)] = v;
    s &= ~(1u << v);
  }

  // Fill-in along the order; bag of v = {v} + its not-yet-eliminated
  // neighbors at elimination time.
  std::vector<std::uint32_t> fill = adj;
  std::vector<std::uint32_t> bag_mask(static_cast<std::size_t>(n), 0);
  std::vector<int> elim_pos(static_cast<std::size_t>(n), 0);
  std::uint32_t remaining = full;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    elim_pos[static_cast<std::size_t>(v)] = i;
    remaining &= ~(1u << v);
    std::uint32_t higher = fill[static_cast<std::size_t>(v)] & remaining;
    bag_mask[static_cast<std::size_t>(v)] = higher | (1u << v);
    std::uint32_t bits = higher;
    while (bits) {
      int w = std::countr_zero(bits);
      bits &= bits - 1;
      fill[static_cast<std::size_t>(w)] |= higher & ~(1u << w);
    }
  }

  TreeDecomposition td;
  td.bags.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::uint32_t bits = bag_mask[static_cast<std::size_t>(v)];
    auto& bag = td.bags[static_cast<std::size_t>(v)];
    while (bits) {
      int w = std::countr_zero(bits);
      bits &= bits - 1;
      bag.push_back(w);
    }
    std::sort(bag.begin(), bag.end());
  }
  // Node id of v's bag = v. Parent of v = earliest-eliminated vertex of
  // bag(v) - {v}; bags with no parent are component roots, chained.
  std::vector<int> roots;
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    std::uint32_t others =
        bag_mask[static_cast<std::size_t>(v)] & ~(1u << v);
    if (!others) {
      roots.push_back(v);
      continue;
    }
    int parent = -1;
    int parent_pos = n;
    std::uint32_t bits = others;
    while (bits) {
      int w = std::countr_zero(bits);
      bits &= bits - 1;
      if (elim_pos[static_cast<std::size_t>(w)] < parent_pos) {
        parent_pos = elim_pos[static_cast<std::size_t>(w)];
        parent = w;
      }
    }
    td.edges.emplace_back(v, parent);
  }
  for (std::size_t i = 1; i < roots.size(); ++i)
    td.edges.emplace_back(roots[i - 1], roots[i]);

  detail::check_invariant(td.width() == tw,
                          "witness decomposition width differs from DP");
  TreeDecomposition minimal = minimalize(td);
  require_tree_decomposition(g, minimal);
  detail::check_invariant(minimal.width() == tw,
                          "minimalized witness changed width");
  return TreewidthResult{tw, std::move(minimal)};
}

CompleteTreeDecomposition make_complete(const Graph& g,
                                        const TreeDecomposition& t,
                                        int level) {
  require_tree_decomposition(g, t);
  const int n = g.vertex_count();
  if (level > n - 1)
    throw input_error("level must be <= n-1 = " + std::to_string(n - 1));
  TreeDecomposition cur = minimalize(t);
  if (cur.width() > level)
    throw input_error("level must be >= decomposition size " +
                      std::to_string(cur.width()));

  // Recursive completion per the constructive proof; works on bags with
  // original vertex ids throughout.
  std::vector<int> vertices(static_cast<std::size_t>(n));
  std::iota(vertices.begin(), vertices.end(), 0);

  auto complete_rec = [&](auto&& self, TreeDecomposition td,
                          std::vector<int> verts) -> TreeDecomposition {
    if (static_cast<int>(verts.size()) == level + 1) {
      TreeDecomposition base;
      base.bags.push_back(verts);
      return base;
    }
    auto adj = tree_adjacency(td);
    int leaf = -1;
    for (int u = 0; u < td.node_count(); ++u)
      if (adj[static_cast<std::size_t>(u)].size() <= 1) {
        leaf = u;
        break;
      }
    detail::check_invariant(leaf >= 0, "tree without a leaf");
    detail::check_invariant(
        !adj[static_cast<std::size_t>(leaf)].empty(),
        "single-node decomposition should have hit the base case");
    int father = adj[static_cast<std::size_t>(leaf)][0];
    auto private_vertices =
        bag_difference(td.bags[static_cast<std::size_t>(leaf)],
                       td.bags[static_cast<std::size_t>(father)]);
    detail::check_invariant(!private_vertices.empty(),
                            "nested adjacent bags survived restriction");
    int x = private_vertices[0];
    std::vector<int> leaf_bag = td.bags[static_cast<std::size_t>(leaf)];

    TreeDecomposition restricted = restrict_decomposition(td, {x});
    std::vector<int> rest_verts;
    rest_verts.reserve(verts.size() - 1);
    for (int v : verts)
      if (v != x) rest_verts.push_back(v);
    TreeDecomposition done =
        self(self, std::move(restricted), std::move(rest_verts));

    std::vector<int> need = leaf_bag;
    need.erase(std::remove(need.begin(), need.end(), x), need.end());
    int host = -1;
    for (int w = 0; w < done.node_count(); ++w)
      if (contains_all(done.bags[static_cast<std::size_t>(w)], need)) {
        host = w;
        break;
      }
    detail::check_invariant(host >= 0,
                            "no completed bag hosts the shrunk leaf bag");
    auto extra = bag_difference(done.bags[static_cast<std::size_t>(host)],
                                leaf_bag);
    detail::check_invariant(!extra.empty(),
                            "host bag does not exceed the leaf bag");
    int y = extra[0];
    std::vector<int> new_bag = done.bags[static_cast<std::size_t>(host)];
    new_bag.erase(std::remove(new_bag.begin(), new_bag.end(), y),
                  new_bag.end());
    new_bag.push_back(x);
    std::sort(new_bag.begin(), new_bag.end());
    done.edges.emplace_back(host, done.node_count());
    done.bags.push_back(std::move(new_bag));
    return done;
  };

  CompleteTreeDecomposition result{
      complete_rec(complete_rec, cur, std::move(vertices)), level};
  require_complete_decomposition(g, result);
  for (const auto& bag : cur.bags) {
    bool hosted = false;
    for (const auto& big : result.tree.bags)
      if (contains_all(big, bag)) {
        hosted = true;
        break;
      }
    detail::check_invariant(hosted,
                            "an input bag is not inside any output bag");
  }
  return result;
}

std::vector<int> find_babies(const CompleteTreeDecomposition& t) {
  const int nodes = t.tree.node_count();
  if (nodes == 0) return {};
  if (nodes == 1) return t.tree.bags[0];  // 1-node convention
  auto adj = tree_adjacency(t.tree);
  int top = -1;
  for (const auto& bag : t.tree.bags)
    for (int v : bag) top = std::max(top, v);
  std::vector<int> count(static_cast<std::size_t>(top + 1), 0);
  std::vector<int> where(static_cast<std::size_t>(top + 1), -1);
  for (int u = 0; u < nodes; ++u)
    for (int v : t.tree.bags[static_cast<std::size_t>(u)]) {
      ++count[static_cast<std::size_t>(v)];
      where[static_cast<std::size_t>(v)] = u;
    }
  std::vector<int> babies;
  for (int v = 0; v <= top; ++v)
    if (count[static_cast<std::size_t>(v)] == 1 &&
        adj[static_cast<std::size_t>(where[static_cast<std::size_t>(v)])]
                .size() == 1)
      babies.push_back(v);
  return babies;
}

FamilyPartition family_partition(const CompleteTreeDecomposition& t) {
  int top = -1;
  for (const auto& bag : t.tree.bags)
    for (int v : bag) top = std::max(top, v);
  FamilyPartition p;
  p.family_of.assign(static_cast<std::size_t>(top + 1), -1);
  if (t.tree.node_count() == 0) return p;

  std::vector<int> parent(static_cast<std::size_t>(top + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(v)])];
      v = parent[static_cast<std::size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] =
        std::min(a, b);
  };

  for (const auto& [a, b] : t.tree.edges) {
    auto da = bag_difference(t.tree.bags[static_cast<std::size_t>(a)],
                             t.tree.bags[static_cast<std::size_t>(b)]);
    auto db = bag_difference(t.tree.bags[static_cast<std::size_t>(b)],
                             t.tree.bags[static_cast<std::size_t>(a)]);
    detail::check_invariant(da.size() == 1 && db.size() == 1,
                            "family partition needs a complete "
                            "decomposition (one exchanged pair per edge)");
    unite(da[0], db[0]);
  }

  // Family ids in order of each family's smallest member.
  std::vector<bool> in_bags(static_cast<std::size_t>(top + 1), false);
  for (const auto& bag : t.tree.bags)
    for (int v : bag) in_bags[static_cast<std::size_t>(v)] = true;
  for (int v = 0; v <= top; ++v) {
    if (!in_bags[static_cast<std::size_t>(v)]) continue;
    int root = find(v);
    if (p.family_of[static_cast<std::size_t>(root)] == -1)
      p.family_of[static_cast<std::size_t>(root)] = p.family_count++;
    p.family_of[static_cast<std::size_t>(v)] =
        p.family_of[static_cast<std::size_t>(root)];
  }

  detail::check_invariant(p.family_count == t.level + 1,
                          "family count differs from level+1");
  for (const auto& bag : t.tree.bags) {
    std::vector<int> hits(static_cast<std::size_t>(p.family_count), 0);
    for (int v : bag)
      ++hits[static_cast<std::size_t>(
          p.family_of[static_cast<std::size_t>(v)])];
    for (int f = 0; f < p.family_count; ++f)
      detail::check_invariant(hits[static_cast<std::size_t>(f)] == 1,
                              "a bag does not hold exactly one member of "
                              "every family");
  }
  return p;
}

bool is_coherent(const Graph& g, const CompleteTreeDecomposition& t,
                 const Coloring& c, const std::vector<int>& X) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring size mismatch");
  if (!is_proper(g, c)) throw input_error("coloring is not proper");
  std::vector<bool> in_x(static_cast<std::size_t>(g.vertex_count()), false);
  for (int v : X) {
    if (v < 0 || v >= g.vertex_count())
      throw input_error("X mentions out-of-range vertex");
    in_x[static_cast<std::size_t>(v)] = true;
  }
  for (const auto& [a, b] : t.tree.edges) {
    auto da = bag_difference(t.tree.bags[static_cast<std::size_t>(a)],
                             t.tree.bags[static_cast<std::size_t>(b)]);
    auto db = bag_difference(t.tree.bags[static_cast<std::size_t>(b)],
                             t.tree.bags[static_cast<std::size_t>(a)]);
    if (da.size() != 1 || db.size() != 1)
      throw input_error("coherence needs a complete decomposition");
    int x = da[0];
    int y = db[0];
    if (in_x[static_cast<std::size_t>(x)] &&
        in_x[static_cast<std::size_t>(y)] && c.color(x) != c.color(y))
      return false;
  }
  for (const auto& bag : t.tree.bags)
    for (int x : bag) {
      if (!in_x[static_cast<std::size_t>(x)]) continue;
      for (int y : bag)
        if (y != x && c.color(y) == c.color(x)) return false;
    }
  return true;
}

bool is_coherent(const Graph& g, const CompleteTreeDecomposition& t,
                 const Coloring& c) {
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  std::iota(all.begin(), all.end(), 0);
  return is_coherent(g, t, c, all);
}

}  // namespace rekolor
