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

#include "rekolor/generators.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace rekolor {

namespace {
void require_positive(int n) {
  if (n < 1) throw input_error("generator needs n >= 1, got " +
                               std::to_string(n));
}
}  // namespace

Graph gen_complete(int n) {
  require_positive(n);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_bipartite_minus_matching(int n) {
  require_positive(n);
  Graph g(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) g.add_edge(i, n + j);
  return g;
}

Graph gen_path(int n) {
  require_positive(n);
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph gen_cycle(int n) {
  if (n < 3) throw input_error("cycle needs n >= 3");
  Graph g = gen_path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph gen_star(int n) {
  require_positive(n);
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

PartialKTree gen_partial_ktree(int n, int k, double edge_keep_prob,
                               std::uint64_t seed) {
  require_positive(n);
  if (k < 0 || k > n - 1)
    throw input_error("partial k-tree needs 0 <= k <= n-1");
  if (edge_keep_prob < 0.0 || edge_keep_prob > 1.0)
    throw input_error("edge_keep_prob must lie in [0, 1]");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  TreeDecomposition td;
  std::vector<std::pair<int, int>> ktree_edges;

  std::vector<int> first_bag(static_cast<std::size_t>(k + 1));
  for (int v = 0; v <= k; ++v) {
    first_bag[static_cast<std::size_t>(v)] = v;
    for (int u = 0; u < v; ++u) ktree_edges.emplace_back(u, v);
  }
  td.bags.push_back(first_bag);

  for (int v = k + 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick_bag(0,
                                                        td.bags.size() - 1);
    std::size_t host = pick_bag(rng);
    std::uniform_int_distribution<std::size_t> pick_out(
        0, td.bags[host].size() - 1);
    int evicted = td.bags[host][pick_out(rng)];
    std::vector<int> bag;
    bag.reserve(static_cast<std::size_t>(k + 1));
    for (int w : td.bags[host])
      if (w != evicted) {
        bag.push_back(w);
        ktree_edges.emplace_back(w, v);
      }
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.edges.emplace_back(static_cast<int>(host),
                          static_cast<int>(td.bags.size()));
    td.bags.push_back(std::move(bag));
  }

  Graph g(n);
  for (const auto& [u, v] : ktree_edges)
    if (coin(rng) < edge_keep_prob) g.add_edge(u, v);

  return PartialKTree{std::move(g),
                      CompleteTreeDecomposition{std::move(td), k}};
}

Graph gen_random_graph(int n, double p, std::uint64_t seed) {
  require_positive(n);
  if (p < 0.0 || p > 1.0) throw input_error("p must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) g.add_edge(u, v);
  return g;
}

}  // namespace rekolor
