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

#include <cstdint>
#include <utility>
#include <vector>

#include "rekolor/errors.hpp"

namespace rekolor {

using Vertex = int;  // 0-based everywhere inside the library
using Color = int;   // 1-based; 0 is never a legal color

// Simple undirected graph. Vertices are 0..n-1, self-loops rejected,
// duplicate edges collapsed. Neighbor lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count,
                          const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  const std::vector<int>& neighbors(int v) const;
  bool adjacent(int u, int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  // Induced subgraph on `keep` (ascending, deduplicated internally).
  // Vertex i of the result is keep[i].
  Graph induced(const std::vector<int>& keep) const;

  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Immutable proper-coloring candidate: a total assignment of colors
// 1..palette_size to vertices 0..n-1. Properness is a separate check.
class Coloring {
 public:
  Coloring(std::vector<int> colors, int palette_size);

  int size() const { return static_cast<int>(colors_.size()); }
  int palette_size() const { return k_; }
  int color(int v) const;
  const std::vector<int>& colors() const { return colors_; }
  int max_color() const;

  // Copy with vertex v set to color c.
  Coloring recolored(int v, int c) const;

  bool operator==(const Coloring& other) const = default;

 private:
  std::vector<int> colors_;
  int k_ = 0;
};

struct RecolorStep {
  int vertex = 0;
  int new_color = 0;

  bool operator==(const RecolorStep& other) const = default;
};

// A start coloring plus an ordered list of single-vertex recolorings.
struct RecolorSequence {
  Coloring start;
  std::vector<RecolorStep> steps;

  std::size_t length() const { return steps.size(); }
};

bool is_proper(const Graph& g, const Coloring& c);

// Replays the sequence, checking that the start and every intermediate
// coloring is proper and that every step changes its vertex to a
// different in-palette color. Returns the final coloring.
// Throws validation_error with the failing step index otherwise.
Coloring validate_sequence(const Graph& g, const RecolorSequence& seq);

// Number of times each vertex is recolored.
std::vector<int> per_vertex_recolor_counts(const RecolorSequence& seq, int n);

// Valid sequence from end(seq) back to seq.start, replaying steps in
// reverse with inverted colors. Validates the input first.
RecolorSequence reversed_sequence(const Graph& g, const RecolorSequence& seq);

// Removes no-op steps and merges runs of consecutive steps on the same
// vertex (always validity-preserving), iterated to a fixpoint.
RecolorSequence simplified_sequence(const Graph& g,
                                    const RecolorSequence& seq);

// Concatenation; requires end(a) == b.start.
RecolorSequence concat_sequences(const Graph& g, const RecolorSequence& a,
                                 const RecolorSequence& b);

namespace detail {
// Applies one step in place, checking properness against g. Used by the
// engines so a broken construction fails at the exact offending step.
void apply_step_checked(const Graph& g, std::vector<int>& colors, int v,
                        int c);
}  // namespace detail

}  // namespace rekolor
