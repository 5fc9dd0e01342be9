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

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace rekolor {

namespace {

void check_guard(const Graph& g, int guard_max_n, const char* what) {
  if (g.vertex_count() > guard_max_n)
    throw resource_error(std::string(what) + " is guarded at n <= " +
                         std::to_string(guard_max_n) + ", got n = " +
                         std::to_string(g.vertex_count()));
}

int smallest_free_color(const Graph& g, const std::vector<int>& colors,
                        int v, int floor_color) {
  int c = floor_color;
  bool taken = true;
  while (taken) {
    taken = false;
    for (int w : g.neighbors(v))
      if (colors[static_cast<std::size_t>(w)] == c) {
        taken = true;
        ++c;
        break;
      }
  }
  return c;
}

// Branch and bound for chi_g over greedy-feasible colorings. A partial
// coloring is viable only if every colored vertex can still have its
// missing smaller colors covered by distinct uncolored neighbors.
class GrundySearch {
 public:
  explicit GrundySearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (g_.degree(a) != g_.degree(b)) return g_.degree(a) > g_.degree(b);
      return a < b;
    });
    color_.assign(static_cast<std::size_t>(n_), 0);
    // Seed with the identity-order greedy coloring.
    std::vector<int> seed(static_cast<std::size_t>(n_), 0);
    for (int v = 0; v < n_; ++v)
      seed[static_cast<std::size_t>(v)] =
          smallest_free_color(g_, seed, v, 1);
    for (int c : seed) best_ = std::max(best_, c);
  }

  int run() {
    if (n_ == 0) return 0;
    descend(0, 0);
    return best_;
  }

 private:
  bool viable(int v_changed) const {
    // Only vertices adjacent to the last assignment can newly fail.
    for (int u : g_.neighbors(v_changed)) {
      if (color_[static_cast<std::size_t>(u)] == 0) continue;
      if (!coverable(u)) return false;
    }
    return coverable(v_changed);
  }

  bool coverable(int u) const {
    int cu = color_[static_cast<std::size_t>(u)];
    std::vector<bool> present(static_cast<std::size_t>(cu), false);
    std::vector<int> caps;
    for (int w : g_.neighbors(u)) {
      int cw = color_[static_cast<std::size_t>(w)];
      if (cw == 0)
        caps.push_back(g_.degree(w) + 1);
      else if (cw < cu)
        present[static_cast<std::size_t>(cw)] = true;
    }
    std::vector<int> missing;
    for (int j = 1; j < cu; ++j)
      if (!present[static_cast<std::size_t>(j)]) missing.push_back(j);
    if (missing.size() > caps.size()) return false;
    // Hall's condition for downward-closed color sets: match the largest
    // missing colors to the largest caps.
    std::sort(caps.rbegin(), caps.rend());
    std::sort(missing.rbegin(), missing.rend());
    for (std::size_t i = 0; i < missing.size(); ++i)
      if (caps[i] < missing[i]) return false;
    return true;
  }

  void descend(int pos, int current_max) {
    if (pos == n_) {
      best_ = std::max(best_, current_max);
      return;
    }
    // Optimistic bound: remaining vertices cannot exceed deg+1.
    int optimistic = current_max;
    for (int i = pos; i < n_; ++i)
      optimistic = std::max(
          optimistic, g_.degree(order_[static_cast<std::size_t>(i)]) + 1);
    if (optimistic <= best_) return;

    int v = order_[static_cast<std::size_t>(pos)];
    for (int c = 1; c <= g_.degree(v) + 1; ++c) {
      bool clash = false;
      for (int w : g_.neighbors(v))
        if (color_[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (clash) continue;
      color_[static_cast<std::size_t>(v)] = c;
      if (viable(v)) descend(pos + 1, std::max(current_max, c));
      color_[static_cast<std::size_t>(v)] = 0;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> color_;
  int best_ = 0;
};

// k-colorability backtracking with DSATUR vertex selection and a
// "first use of a new color" symmetry break.
bool colorable(const Graph& g, int k, std::vector<int>& out) {
  const int n = g.vertex_count();
  std::vector<int> color(static_cast<std::size_t>(n), 0);
  std::vector<int> max_used;  // stack of "colors in use" watermark
  struct Frame {
    int vertex;
    int next_color;
  };
  std::vector<Frame> stack;
  int used = 0;

  auto pick_vertex = [&]() -> int {
    int best = -1;
    int best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (color[static_cast<std::size_t>(v)]) continue;
      std::vector<bool> seen(static_cast<std::size_t>(k + 1), false);
      int sat = 0;
      for (int w : g.neighbors(v)) {
        int cw = color[static_cast<std::size_t>(w)];
        if (cw && !seen[static_cast<std::size_t>(cw)]) {
          seen[static_cast<std::size_t>(cw)] = true;
          ++sat;
        }
      }
      if (sat > best_sat ||
          (sat == best_sat &&
           (best == -1 || g.degree(v) > g.degree(best)))) {
        best_sat = sat;
        best = v;
      }
    }
    return best;
  };

  int assigned = 0;
  int v = n == 0 ? -1 : pick_vertex();
  int c = 1;
  while (true) {
    if (assigned == n) {
      out = color;
      return true;
    }
    bool placed = false;
    int limit = std::min(k, used + 1);
    for (; c <= limit; ++c) {
      bool clash = false;
      for (int w : g.neighbors(v))
        if (color[static_cast<std::size_t>(w)] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        placed = true;
        break;
      }
    }
    if (placed) {
      color[static_cast<std::size_t>(v)] = c;
      stack.push_back({v, c + 1});
      max_used.push_back(used);
      used = std::max(used, c);
      ++assigned;
      if (assigned < n) v = pick_vertex();
      c = 1;
    } else {
      if (stack.empty()) return false;
      v = stack.back().vertex;
      c = stack.back().next_color;
      used = max_used.back();
      stack.pop_back();
      max_used.pop_back();
      color[static_cast<std::size_t>(v)] = 0;
      --assigned;
    }
  }
}

int greedy_clique_lower_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  std::vector<int> clique;
  for (int v : order) {
    bool ok = true;
    for (int u : clique)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (ok) clique.push_back(v);
  }
  return static_cast<int>(clique.size());
}

}  // namespace

void require_vertex_order(const Graph& g, const VertexOrder& o) {
  const int n = g.vertex_count();
  if (static_cast<int>(o.order.size()) != n)
    throw input_error("order has " + std::to_string(o.order.size()) +
                      " entries for a graph on " + std::to_string(n) +
                      " vertices");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : o.order) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw input_error("order is not a permutation of 0.." +
                        std::to_string(n - 1));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Coloring greedy_coloring(const Graph& g, const VertexOrder& o) {
  require_vertex_order(g, o);
  const int n = g.vertex_count();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  int max_color = 1;
  for (int v : o.order) {
    int c = smallest_free_color(g, colors, v, 1);
    colors[static_cast<std::size_t>(v)] = c;
    max_color = std::max(max_color, c);
  }
  return Coloring(std::move(colors), std::max(1, max_color));
}

bool is_greedy_feasible(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring size mismatch");
  for (int v = 0; v < g.vertex_count(); ++v) {
    int cv = c.color(v);
    std::vector<bool> present(static_cast<std::size_t>(cv), false);
    for (int w : g.neighbors(v)) {
      int cw = c.color(w);
      if (cw < cv) present[static_cast<std::size_t>(cw)] = true;
    }
    for (int j = 1; j < cv; ++j)
      if (!present[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

int grundy_number_exact(const Graph& g, int guard_max_n) {
  check_guard(g, guard_max_n, "exact grundy number");
  return GrundySearch(g).run();
}

int grundy_number_bruteforce(const Graph& g, int guard_max_n) {
  check_guard(g, guard_max_n, "brute-force grundy number");
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  int best = 0;
  do {
    Coloring c = greedy_coloring(g, VertexOrder{order});
    best = std::max(best, c.max_color());
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

ChromaticInfo chromatic_number_exact(const Graph& g, int guard_max_n) {
  check_guard(g, guard_max_n, "exact chromatic number");
  const int n = g.vertex_count();
  if (n == 0) return ChromaticInfo{0, Coloring({}, 1)};
  std::vector<int> colors;
  int k = std::max(1, greedy_clique_lower_bound(g));
  while (!colorable(g, k, colors)) ++k;
  // Greedy-ize: sweep every vertex down to its smallest free color until
  // nothing moves; the color sum strictly decreases, so this terminates.
  bool moved = true;
  while (moved) {
    moved = false;
    for (int v = 0; v < n; ++v) {
      int c = smallest_free_color(g, colors, v, 1);
      if (c < colors[static_cast<std::size_t>(v)]) {
        colors[static_cast<std::size_t>(v)] = c;
        moved = true;
      }
    }
  }
  Coloring witness(std::move(colors), k);
  detail::check_invariant(witness.max_color() == k,
                          "greedy-ized witness lost or gained colors");
  detail::check_invariant(is_greedy_feasible(g, witness),
                          "witness fixpoint is not greedy-feasible");
  return ChromaticInfo{k, std::move(witness)};
}

RecolorSequence grundy_recolor_to_optimal(const Graph& g, int k,
                                          const Coloring& a,
                                          const Coloring& beta) {
  const int n = g.vertex_count();
  if (a.size() != n || beta.size() != n)
    throw input_error("coloring size mismatch");
  if (!is_proper(g, a)) throw input_error("start coloring is not proper");
  if (!is_proper(g, beta)) throw input_error("beta is not proper");
  if (a.max_color() > k || beta.max_color() > k)
    throw input_error("coloring uses colors beyond k");
  if (!is_greedy_feasible(g, beta))
    throw input_error("beta is not a greedy coloring");
  const int chi = chromatic_number_exact(g).chromatic_number;
  if (beta.max_color() != chi)
    throw input_error("beta uses " + std::to_string(beta.max_color()) +
                      " colors but chi(G) = " + std::to_string(chi));
  const int chi_g = grundy_number_exact(g);
  if (k < chi_g + 1)
    throw input_error("need k >= chi_g+1 = " + std::to_string(chi_g + 1) +
                      ", got k = " + std::to_string(k));

  RecolorSequence seq{Coloring(a.colors(), k), {}};
  std::vector<int> colors = a.colors();
  auto emit = [&](int v, int c) {
    detail::apply_step_checked(g, colors, v, c);
    seq.steps.push_back({v, c});
  };

  std::vector<int> active(static_cast<std::size_t>(n));
  std::iota(active.begin(), active.end(), 0);
  int offset = 0;

  while (!active.empty()) {
    Graph sub = g.induced(active);
    bool edgeless = sub.edge_count() == 0;

    if (edgeless) {
      for (int v : active) {
        detail::check_invariant(
            beta.color(v) == offset + 1,
            "beta must collapse to one class once the rest is edgeless");
        if (colors[static_cast<std::size_t>(v)] != beta.color(v))
          emit(v, beta.color(v));
      }
      break;
    }

    // Greedy re-pass over the snapshot classes of the current coloring,
    // ascending colors, ascending ids inside a class. Untouched earlier
    // classes stay below offset, so the floor is offset+1.
    std::vector<int> pass = active;
    std::vector<int> snapshot = colors;
    std::sort(pass.begin(), pass.end(), [&](int x, int y) {
      int cx = snapshot[static_cast<std::size_t>(x)];
      int cy = snapshot[static_cast<std::size_t>(y)];
      if (cx != cy) return cx < cy;
      return x < y;
    });
    for (int v : pass) {
      int c = smallest_free_color(g, colors, v, offset + 1);
      if (c != colors[static_cast<std::size_t>(v)]) emit(v, c);
    }

    const int chi_g_active = grundy_number_exact(sub);
    const int evac = offset + chi_g_active + 1;
    detail::check_invariant(evac <= k,
                            "palette exhausted: evacuation color beyond k");
    for (int v : active)
      detail::check_invariant(
          colors[static_cast<std::size_t>(v)] <= offset + chi_g_active,
          "re-pass exceeded the grundy bound of the active subgraph");

    // Evacuate wrong occupants of the lowest class, settle beta's class.
    std::vector<int> beta_class;
    for (int v : active)
      if (beta.color(v) == offset + 1) beta_class.push_back(v);
    detail::check_invariant(!beta_class.empty(),
                            "beta misses a color class; beta not optimal?");
    for (int v : active) {
      if (colors[static_cast<std::size_t>(v)] != offset + 1) continue;
      if (beta.color(v) != offset + 1) emit(v, evac);
    }
    for (int v : beta_class)
      if (colors[static_cast<std::size_t>(v)] != offset + 1)
        emit(v, offset + 1);

    std::vector<int> next_active;
    next_active.reserve(active.size() - beta_class.size());
    for (int v : active)
      if (beta.color(v) != offset + 1) next_active.push_back(v);
    active = std::move(next_active);
    ++offset;
  }

  detail::check_invariant(colors == beta.colors(),
                          "engine did not reach beta");
  detail::check_invariant(
      seq.steps.size() <= static_cast<std::size_t>(2 * chi * n),
      "sequence exceeds the 2*chi*n bound");
  return seq;
}

RecolorSequence grundy_recolor(const Graph& g, int k, const Coloring& a,
                               const Coloring& b) {
  const int n = g.vertex_count();
  if (a.size() != n || b.size() != n)
    throw input_error("coloring size mismatch");
  if (!is_proper(g, a)) throw input_error("start coloring is not proper");
  if (!is_proper(g, b)) throw input_error("target coloring is not proper");
  if (a.max_color() > k || b.max_color() > k)
    throw input_error("coloring uses colors beyond k");
  const int chi_g = grundy_number_exact(g);
  if (k < chi_g + 1)
    throw input_error("need k >= chi_g+1 = " + std::to_string(chi_g + 1) +
                      ", got k = " + std::to_string(k));
  Coloring start(a.colors(), k);
  if (a.colors() == b.colors()) return RecolorSequence{start, {}};

  Coloring beta = chromatic_number_exact(g).witness;
  RecolorSequence to_beta = grundy_recolor_to_optimal(g, k, a, beta);
  RecolorSequence from_b = grundy_recolor_to_optimal(g, k, b, beta);
  RecolorSequence back = reversed_sequence(g, from_b);
  RecolorSequence full = concat_sequences(g, to_beta, back);
  detail::check_invariant(
      full.steps.size() <= static_cast<std::size_t>(4 * chi_g * n),
      "sequence exceeds the 4*chi_g*n bound");
  return full;
}

}  // namespace rekolor
