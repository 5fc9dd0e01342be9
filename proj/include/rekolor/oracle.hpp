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
#include <iosfwd>
#include <optional>
#include <vector>

#include "rekolor/graph.hpp"

namespace rekolor {

// Default cap on the number of states the oracle may touch, 5e6 unless
// the REKOLOR_STATE_LIMIT environment variable overrides it.
std::size_t default_state_limit();

enum class MixingStatus {
  kEmptyRecoloringGraph,  // no proper k-coloring exists
  kMixing,                // R_k(G) connected
  kNotMixing,             // R_k(G) disconnected
};

// Exact shortest recoloring distance between proper k-colorings, by lazy
// BFS over R_k(G); nullopt when a and b lie in different components.
// Neighbor enumeration is (vertex, color) lexicographic.
std::optional<std::int64_t> oracle_distance(
    const Graph& g, int k, const Coloring& a, const Coloring& b,
    std::size_t state_limit = default_state_limit());

MixingStatus is_k_mixing(const Graph& g, int k,
                         std::size_t state_limit = default_state_limit());

// Diameter of R_k(G): nullopt when R_k is disconnected (infinite);
// input_error when R_k is empty. A single-state R_k has diameter 0.
std::optional<std::int64_t> recoloring_diameter(
    const Graph& g, int k, std::size_t state_limit = default_state_limit());

// Number of neighbors of c in R_k(G): how many (vertex, new color) pairs
// keep the coloring proper. 0 means c is frozen.
int frozen_degree(const Graph& g, int k, const Coloring& c);

// Smallest m <= k_max such that is_k_mixing holds for every k in
// [m, k_max]; nullopt when even k_max is not mixing. An empty R_k counts
// as not mixing; a single-state R_k counts as mixing (the edgeless k=1
// convention, so edgeless graphs probe to 1).
std::optional<int> mixing_number_probe(
    const Graph& g, int k_max,
    std::size_t state_limit = default_state_limit());

// Fully enumerated R_k(G) for component queries and dumps. Construction
// touches every proper k-coloring; the guard caps that.
class RecoloringGraphOracle {
 public:
  RecoloringGraphOracle(Graph g, int k,
                        std::size_t state_limit = default_state_limit());

  const Graph& graph() const { return g_; }
  int palette_size() const { return k_; }
  std::size_t state_count() const { return states_.size(); }
  int component_count() const { return component_count_; }

  // States in discovery order (lexicographic smallest first).
  const std::vector<std::vector<int>>& states() const { return states_; }

  std::optional<std::size_t> state_index(const Coloring& c) const;
  int component_of(const Coloring& c) const;

  // Edge list of R_k(G) over state indices, "<i> <j>" per line with
  // i < j, preceded by a "states <count>" header line.
  void dump_edges(std::ostream& out) const;

 private:
  Graph g_;
  int k_;
  std::vector<std::vector<int>> states_;
  std::vector<int> component_;
  int component_count_ = 0;
};

}  // namespace rekolor
