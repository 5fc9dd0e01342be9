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

#include "rekolor/graph.hpp"

#include <algorithm>
#include <string>

namespace rekolor {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0) throw input_error("vertex count must be >= 0");
  n_ = vertex_count;
  adj_.resize(static_cast<std::size_t>(n_));
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw input_error("vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw input_error("self-loop at vertex " + std::to_string(u));
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;  // duplicate, collapse
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++m_;
}

const std::vector<int>& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    check_vertex(sorted[i]);
    index[static_cast<std::size_t>(sorted[i])] = static_cast<int>(i);
  }
  Graph g(static_cast<int>(sorted.size()));
  for (int u : sorted)
    for (int v : neighbors(u))
      if (u < v && index[static_cast<std::size_t>(v)] >= 0)
        g.add_edge(index[static_cast<std::size_t>(u)],
                   index[static_cast<std::size_t>(v)]);
  return g;
}

Coloring::Coloring(std::vector<int> colors, int palette_size)
    : colors_(std::move(colors)), k_(palette_size) {
  if (k_ < 1) throw input_error("palette size must be >= 1");
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    int c = colors_[v];
    if (c < 1 || c > k_)
      throw input_error("color " + std::to_string(c) + " of vertex " +
                        std::to_string(v) + " outside palette 1.." +
                        std::to_string(k_));
  }
}

int Coloring::color(int v) const {
  if (v < 0 || v >= size())
    throw input_error("vertex " + std::to_string(v) + " out of range");
  return colors_[static_cast<std::size_t>(v)];
}

int Coloring::max_color() const {
  int m = 0;
  for (int c : colors_) m = std::max(m, c);
  return m;
}

Coloring Coloring::recolored(int v, int c) const {
  if (v < 0 || v >= size())
    throw input_error("vertex " + std::to_string(v) + " out of range");
  std::vector<int> next = colors_;
  next[static_cast<std::size_t>(v)] = c;
  return Coloring(std::move(next), k_);
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring has " + std::to_string(c.size()) +
                      " entries for a graph on " +
                      std::to_string(g.vertex_count()) + " vertices");
  for (const auto& [u, v] : g.edges())
    if (c.color(u) == c.color(v)) return false;
  return true;
}

Coloring validate_sequence(const Graph& g, const RecolorSequence& seq) {
  const int n = g.vertex_count();
  const int k = seq.start.palette_size();
  if (seq.start.size() != n)
    throw validation_error("start coloring size mismatch",
                           validation_error::npos);
  if (!is_proper(g, seq.start))
    throw validation_error("start coloring is not proper",
                           validation_error::npos);
  std::vector<int> colors = seq.start.colors();
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const auto& [v, c] = seq.steps[i];
    if (v < 0 || v >= n)
      throw validation_error("vertex " + std::to_string(v) + " out of range",
                             i);
    if (c < 1 || c > k)
      throw validation_error("color " + std::to_string(c) +
                                 " outside palette 1.." + std::to_string(k),
                             i);
    if (colors[static_cast<std::size_t>(v)] == c)
      throw validation_error("step does not change the color of vertex " +
                                 std::to_string(v),
                             i);
    for (int w : g.neighbors(v))
      if (colors[static_cast<std::size_t>(w)] == c)
        throw validation_error("recoloring vertex " + std::to_string(v) +
                                   " to " + std::to_string(c) +
                                   " conflicts with neighbor " +
                                   std::to_string(w),
                               i);
    colors[static_cast<std::size_t>(v)] = c;
  }
  return Coloring(std::move(colors), k);
}

std::vector<int> per_vertex_recolor_counts(const RecolorSequence& seq,
                                           int n) {
  std::vector<int> counts(static_cast<std::size_t>(n), 0);
  for (const auto& s : seq.steps) {
    if (s.vertex < 0 || s.vertex >= n)
      throw input_error("step vertex out of range");
    ++counts[static_cast<std::size_t>(s.vertex)];
  }
  return counts;
}

RecolorSequence reversed_sequence(const Graph& g,
                                  const RecolorSequence& seq) {
  Coloring final = validate_sequence(g, seq);
  // Walk forward remembering the color each step overwrote, then emit
  // the overwritten colors backwards.
  std::vector<int> colors = seq.start.colors();
  std::vector<int> overwritten(seq.steps.size());
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    overwritten[i] = colors[static_cast<std::size_t>(seq.steps[i].vertex)];
    colors[static_cast<std::size_t>(seq.steps[i].vertex)] =
        seq.steps[i].new_color;
  }
  RecolorSequence rev{final, {}};
  rev.steps.reserve(seq.steps.size());
  for (std::size_t i = seq.steps.size(); i-- > 0;)
    rev.steps.push_back({seq.steps[i].vertex, overwritten[i]});
  return rev;
}

RecolorSequence simplified_sequence(const Graph& g,
                                    const RecolorSequence& seq) {
  validate_sequence(g, seq);
  std::vector<RecolorStep> steps = seq.steps;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> colors = seq.start.colors();
    std::vector<RecolorStep> out;
    std::vector<int> overwritten;  // color each emitted step replaced
    out.reserve(steps.size());
    overwritten.reserve(steps.size());
    for (const auto& step : steps) {
      std::size_t v = static_cast<std::size_t>(step.vertex);
      if (colors[v] == step.new_color) {  // no-op
        changed = true;
        continue;
      }
      if (!out.empty() && out.back().vertex == step.vertex) {
        // Merge consecutive steps on one vertex: only the intermediate
        // coloring disappears and it was proper, so validity survives.
        int original = overwritten.back();
        out.pop_back();
        overwritten.pop_back();
        colors[v] = step.new_color;
        if (original != step.new_color) {
          out.push_back({step.vertex, step.new_color});
          overwritten.push_back(original);
        }
        changed = true;
        continue;
      }
      overwritten.push_back(colors[v]);
      colors[v] = step.new_color;
      out.push_back(step);
    }
    steps = std::move(out);
  }
  RecolorSequence result{seq.start, std::move(steps)};
  validate_sequence(g, result);
  return result;
}

RecolorSequence concat_sequences(const Graph& g, const RecolorSequence& a,
                                 const RecolorSequence& b) {
  Coloring mid = validate_sequence(g, a);
  if (!(mid == b.start))
    throw input_error(
        "sequences do not compose: end of first differs from start of "
        "second");
  RecolorSequence out{a.start, a.steps};
  out.steps.insert(out.steps.end(), b.steps.begin(), b.steps.end());
  return out;
}

namespace detail {
void apply_step_checked(const Graph& g, std::vector<int>& colors, int v,
                        int c) {
  for (int w : g.neighbors(v))
    check_invariant(colors[static_cast<std::size_t>(w)] != c,
                    "constructed step conflicts with a neighbor");
  check_invariant(colors[static_cast<std::size_t>(v)] != c,
                  "constructed step is a no-op");
  colors[static_cast<std::size_t>(v)] = c;
}
}  // namespace detail

}  // namespace rekolor
