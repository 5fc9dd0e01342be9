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

#include "rekolor/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <ostream>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace rekolor {

namespace {

// State keys: packed u64 when n*bits_per_color fits, byte strings
// otherwise (proper-coloring counts can be small even when the packed
// key overflows, e.g. long paths with k=2).
struct PackedCodec {
  int n;
  int bits;

  static std::optional<PackedCodec> make(int n, int k) {
    int bits = 1;
    while ((1 << bits) < k) ++bits;  // colors stored as color-1
    if (n > 0 && bits * n > 64) return std::nullopt;
    return PackedCodec{n, bits};
  }

  std::uint64_t encode(const std::vector<int>& colors) const {
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v)
      key |= static_cast<std::uint64_t>(colors[static_cast<std::size_t>(v)] -
                                        1)
             << (bits * v);
    return key;
  }
};

struct StringCodec {
  int n;

  std::string encode(const std::vector<int>& colors) const {
    std::string key(static_cast<std::size_t>(n), '\0');
    for (int v = 0; v < n; ++v)
      key[static_cast<std::size_t>(v)] =
          static_cast<char>(colors[static_cast<std::size_t>(v)]);
    return key;
  }
};

void require_proper_input(const Graph& g, int k, const Coloring& c,
                          const char* name) {
  if (c.size() != g.vertex_count())
    throw input_error(std::string(name) + " has wrong vertex count");
  if (c.max_color() > k)
    throw input_error(std::string(name) + " uses colors beyond k");
  if (!is_proper(g, c))
    throw input_error(std::string(name) + " is not a proper coloring");
}

void check_limit(std::size_t visited, std::size_t limit) {
  if (visited > limit)
    throw resource_error(
        "recoloring-graph state count exceeded the guard of " +
        std::to_string(limit) +
        " states (set REKOLOR_STATE_LIMIT or pass a larger limit)");
}

bool color_ok(const Graph& g, const std::vector<int>& colors, int v, int c) {
  for (int w : g.neighbors(v))
    if (colors[static_cast<std::size_t>(w)] == c) return false;
  return true;
}

// Smallest proper k-coloring in lexicographic order, or nullopt.
std::optional<std::vector<int>> first_proper_coloring(const Graph& g,
                                                      int k) {
  const int n = g.vertex_count();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  int v = 0;
  while (v < n) {
    int c = colors[static_cast<std::size_t>(v)] + 1;
    bool placed = false;
    for (; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && colors[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      if (ok) {
        colors[static_cast<std::size_t>(v)] = c;
        placed = true;
        break;
      }
    }
    if (placed) {
      ++v;
    } else {
      colors[static_cast<std::size_t>(v)] = 0;
      --v;
      if (v < 0) return std::nullopt;
    }
  }
  return colors;
}

// BFS from `start` over R_k(G), calling visit(state, dist) on every
// discovered state (including start) in deterministic order. Stops early
// when visit returns false. Template over the codec's key type.
template <typename Codec>
void bfs_component(const Graph& g, int k, const Codec& codec,
                   const std::vector<int>& start, std::size_t limit,
                   auto&& visit) {
  const int n = g.vertex_count();
  using Key = decltype(codec.encode(start));
  std::unordered_set<Key> seen;
  std::deque<std::pair<std::vector<int>, std::int64_t>> frontier;
  seen.insert(codec.encode(start));
  frontier.emplace_back(start, 0);
  if (!visit(start, std::int64_t{0})) return;
  while (!frontier.empty()) {
    auto [cur, d] = std::move(frontier.front());
    frontier.pop_front();
    for (int v = 0; v < n; ++v) {
      int old = cur[static_cast<std::size_t>(v)];
      for (int c = 1; c <= k; ++c) {
        if (c == old || !color_ok(g, cur, v, c)) continue;
        cur[static_cast<std::size_t>(v)] = c;
        Key key = codec.encode(cur);
        if (!seen.contains(key)) {
          check_limit(seen.size() + 1, limit);
          seen.insert(key);
          if (!visit(cur, d + 1)) return;
          frontier.emplace_back(cur, d + 1);
        }
        cur[static_cast<std::size_t>(v)] = old;
      }
    }
  }
}

template <typename F>
void with_codec(const Graph& g, int k, F&& f) {
  if (k > 255)
    throw resource_error("palette too large for the oracle (k > 255)");
  if (auto packed = PackedCodec::make(g.vertex_count(), k)) {
    f(*packed);
  } else {
    f(StringCodec{g.vertex_count()});
  }
}

// Enumerates every proper k-coloring (not just one component) by
// DFS over partial colorings; deterministic lexicographic order.
template <typename Visit>
void enumerate_proper(const Graph& g, int k, std::size_t limit,
                      Visit&& visit) {
  const int n = g.vertex_count();
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  std::size_t count = 0;
  std::size_t placements = 0;
  if (n == 0) return;
  int v = 0;
  while (v >= 0) {
    int c = colors[static_cast<std::size_t>(v)] + 1;
    bool placed = false;
    for (; c <= k; ++c) {
      bool ok = true;
      for (int w : g.neighbors(v))
        if (w < v && colors[static_cast<std::size_t>(w)] == c) {
          ok = false;
          break;
        }
      if (ok) {
        colors[static_cast<std::size_t>(v)] = c;
        placed = true;
        break;
      }
    }
    if (!placed) {
      colors[static_cast<std::size_t>(v)] = 0;
      --v;
      continue;
    }
    // Guards both the output size and pathological dead-end search.
    check_limit(++placements / 64 + 1, limit);
    if (v == n - 1) {
      check_limit(++count, limit);
      visit(colors);
    } else {
      ++v;
    }
  }
}

}  // namespace

std::size_t default_state_limit() {
  if (const char* env = std::getenv("REKOLOR_STATE_LIMIT")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && value > 0)
      return static_cast<std::size_t>(value);
    throw input_error("REKOLOR_STATE_LIMIT must be a positive integer");
  }
  return 5'000'000;
}

std::optional<std::int64_t> oracle_distance(const Graph& g, int k,
                                            const Coloring& a,
                                            const Coloring& b,
                                            std::size_t state_limit) {
  require_proper_input(g, k, a, "start coloring");
  require_proper_input(g, k, b, "target coloring");
  if (a == b) return 0;
  std::optional<std::int64_t> found;
  const std::vector<int>& target = b.colors();
  with_codec(g, k, [&](const auto& codec) {
    bfs_component(g, k, codec, a.colors(), state_limit,
                  [&](const std::vector<int>& state, std::int64_t d) {
                    if (state == target) {
                      found = d;
                      return false;
                    }
                    return true;
                  });
  });
  return found;
}

MixingStatus is_k_mixing(const Graph& g, int k, std::size_t state_limit) {
  if (k < 1) throw input_error("k must be >= 1");
  std::size_t total = 0;
  enumerate_proper(g, k, state_limit, [&](const std::vector<int>&) {
    ++total;
  });
  if (g.vertex_count() == 0) total = 1;  // the empty coloring
  if (total == 0) return MixingStatus::kEmptyRecoloringGraph;
  if (g.vertex_count() == 0) return MixingStatus::kMixing;
  auto start = first_proper_coloring(g, k);
  std::size_t reached = 0;
  with_codec(g, k, [&](const auto& codec) {
    bfs_component(g, k, codec, *start, state_limit,
                  [&](const std::vector<int>&, std::int64_t) {
                    ++reached;
                    return true;
                  });
  });
  return reached == total ? MixingStatus::kMixing : MixingStatus::kNotMixing;
}

std::optional<std::int64_t> recoloring_diameter(const Graph& g, int k,
                                                std::size_t state_limit) {
  RecoloringGraphOracle oracle(g, k, state_limit);
  if (oracle.state_count() == 0)
    throw input_error("no proper " + std::to_string(k) +
                      "-coloring exists; the recoloring graph is empty");
  if (oracle.component_count() > 1) return std::nullopt;
  std::int64_t diameter = 0;
  with_codec(g, k, [&](const auto& codec) {
    for (const auto& state : oracle.states()) {
      std::int64_t ecc = 0;
      bfs_component(g, k, codec, state, state_limit,
                    [&](const std::vector<int>&, std::int64_t d) {
                      ecc = std::max(ecc, d);
                      return true;
                    });
      diameter = std::max(diameter, ecc);
    }
  });
  return diameter;
}

int frozen_degree(const Graph& g, int k, const Coloring& c) {
  require_proper_input(g, k, c, "coloring");
  int count = 0;
  const std::vector<int>& colors = c.colors();
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int col = 1; col <= k; ++col) {
      if (col == colors[static_cast<std::size_t>(v)]) continue;
      if (color_ok(g, colors, v, col)) ++count;
    }
  return count;
}

std::optional<int> mixing_number_probe(const Graph& g, int k_max,
                                       std::size_t state_limit) {
  if (k_max < 1) throw input_error("k_max must be >= 1");
  std::optional<int> best;
  for (int k = k_max; k >= 1; --k) {
    if (is_k_mixing(g, k, state_limit) != MixingStatus::kMixing) break;
    best = k;
  }
  return best;
}

RecoloringGraphOracle::RecoloringGraphOracle(Graph g, int k,
                                             std::size_t state_limit)
    : g_(std::move(g)), k_(k) {
  if (k_ < 1) throw input_error("k must be >= 1");
  enumerate_proper(g_, k_, state_limit,
                   [&](const std::vector<int>& colors) {
                     states_.push_back(colors);
                   });
  if (g_.vertex_count() == 0) states_.push_back({});
  component_.assign(states_.size(), -1);
  // Component labeling by BFS from each unvisited state, in state order.
  std::unordered_map<std::string, std::size_t> index;
  StringCodec codec{g_.vertex_count()};
  if (k_ > 255)
    throw resource_error("palette too large for the oracle (k > 255)");
  index.reserve(states_.size());
  for (std::size_t i = 0; i < states_.size(); ++i)
    index.emplace(codec.encode(states_[i]), i);
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (component_[i] >= 0) continue;
    int comp = component_count_++;
    bfs_component(g_, k_, codec, states_[i], state_limit,
                  [&](const std::vector<int>& state, std::int64_t) {
                    component_[index.at(codec.encode(state))] = comp;
                    return true;
                  });
  }
}

std::optional<std::size_t> RecoloringGraphOracle::state_index(
    const Coloring& c) const {
  if (c.size() != g_.vertex_count()) return std::nullopt;
  auto it = std::lower_bound(states_.begin(), states_.end(), c.colors());
  if (it == states_.end() || *it != c.colors()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

int RecoloringGraphOracle::component_of(const Coloring& c) const {
  auto idx = state_index(c);
  if (!idx) throw input_error("coloring is not a state of R_k(G)");
  return component_[*idx];
}

void RecoloringGraphOracle::dump_edges(std::ostream& out) const {
  out << "states " << states_.size() << "\n";
  const int n = g_.vertex_count();
  for (std::size_t i = 0; i < states_.size(); ++i) {
    std::vector<int> cur = states_[i];
    for (int v = 0; v < n; ++v) {
      int old = cur[static_cast<std::size_t>(v)];
      for (int c = 1; c <= k_; ++c) {
        if (c == old || !color_ok(g_, cur, v, c)) continue;
        cur[static_cast<std::size_t>(v)] = c;
        auto it = std::lower_bound(states_.begin(), states_.end(), cur);
        std::size_t j = static_cast<std::size_t>(it - states_.begin());
        if (i < j) out << i << " " << j << "\n";
        cur[static_cast<std::size_t>(v)] = old;
      }
      cur[static_cast<std::size_t>(v)] = old;
    }
  }
}

}  // namespace rekolor
