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

// Python bindings. Colorings cross the boundary as plain lists of
// 1-based colors; steps as (vertex, color) pairs with 0-based vertices.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rekolor/decomp.hpp"
#include "rekolor/errors.hpp"
#include "rekolor/generators.hpp"
#include "rekolor/graph.hpp"
#include "rekolor/grundy.hpp"
#include "rekolor/oracle.hpp"
#include "rekolor/twrecolor.hpp"

namespace py = pybind11;

namespace {

using Steps = std::vector<std::pair<int, int>>;

rekolor::Coloring lift(std::vector<int> colors, int k) {
  return rekolor::Coloring(std::move(colors), k);
}

Steps pack(const rekolor::RecolorSequence& seq) {
  Steps steps;
  steps.reserve(seq.steps.size());
  for (const auto& s : seq.steps) steps.emplace_back(s.vertex, s.new_color);
  return steps;
}

rekolor::RecolorSequence unpack(const rekolor::Coloring& start,
                                const Steps& steps) {
  rekolor::RecolorSequence seq{start, {}};
  seq.steps.reserve(steps.size());
  for (const auto& [v, c] : steps) seq.steps.push_back({v, c});
  return seq;
}

const char* mixing_name(rekolor::MixingStatus s) {
  switch (s) {
    case rekolor::MixingStatus::kEmptyRecoloringGraph:
      return "empty";
    case rekolor::MixingStatus::kMixing:
      return "mixing";
    default:
      return "not_mixing";
  }
}

}  // namespace

PYBIND11_MODULE(_rekolor, m) {
  m.doc() =
      "Certified step-by-step transformations between proper k-colorings";

  py::register_exception<rekolor::parse_error>(m, "ParseError",
                                               PyExc_ValueError);
  py::register_exception<rekolor::validation_error>(m, "ValidationError",
                                                    PyExc_ValueError);
  py::register_exception<rekolor::resource_error>(m, "ResourceError",
                                                  PyExc_RuntimeError);
  py::register_exception<rekolor::input_error>(m, "InputError",
                                               PyExc_ValueError);

  py::class_<rekolor::Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("vertex_count"))
      .def_static("from_edges", &rekolor::Graph::from_edges,
                  py::arg("vertex_count"), py::arg("edges"))
      .def("add_edge", &rekolor::Graph::add_edge)
      .def("vertex_count", &rekolor::Graph::vertex_count)
      .def("edge_count", &rekolor::Graph::edge_count)
      .def("neighbors", &rekolor::Graph::neighbors)
      .def("adjacent", &rekolor::Graph::adjacent)
      .def("degree", &rekolor::Graph::degree)
      .def("max_degree", &rekolor::Graph::max_degree)
      .def("edges", &rekolor::Graph::edges)
      .def("__eq__", [](const rekolor::Graph& a, const rekolor::Graph& b) {
        return a == b;
      });

  m.def(
      "is_proper",
      [](const rekolor::Graph& g, int k, std::vector<int> colors) {
        return rekolor::is_proper(g, lift(std::move(colors), k));
      },
      py::arg("graph"), py::arg("k"), py::arg("colors"));

  m.def(
      "validate_sequence",
      [](const rekolor::Graph& g, int k, std::vector<int> start,
         const Steps& steps) {
        return rekolor::validate_sequence(g,
                                          unpack(lift(std::move(start), k),
                                                 steps))
            .colors();
      },
      py::arg("graph"), py::arg("k"), py::arg("start"), py::arg("steps"),
      "Replays the steps and returns the final coloring; raises "
      "ValidationError at the first bad step.");

  m.def(
      "tw_recolor",
      [](const rekolor::Graph& g, int k, std::vector<int> a,
         std::vector<int> b) {
        rekolor::TreewidthResult r = rekolor::treewidth_exact(g);
        rekolor::CompleteTreeDecomposition t =
            rekolor::make_complete(g, r.decomposition, r.treewidth);
        return pack(rekolor::tw_recolor(g, t, k, lift(std::move(a), k),
                                        lift(std::move(b), k)));
      },
      py::arg("graph"), py::arg("k"), py::arg("start"), py::arg("target"),
      "Sequence of at most 2*(n*n+n) steps; needs k >= treewidth+2.");

  m.def(
      "grundy_recolor",
      [](const rekolor::Graph& g, int k, std::vector<int> a,
         std::vector<int> b) {
        return pack(rekolor::grundy_recolor(g, k, lift(std::move(a), k),
                                            lift(std::move(b), k)));
      },
      py::arg("graph"), py::arg("k"), py::arg("start"), py::arg("target"),
      "Sequence of at most 4*chi_g*n steps; needs k >= chi_g+1.");

  m.def(
      "oracle_distance",
      [](const rekolor::Graph& g, int k, std::vector<int> a,
         std::vector<int> b) {
        return rekolor::oracle_distance(g, k, lift(std::move(a), k),
                                        lift(std::move(b), k));
      },
      py::arg("graph"), py::arg("k"), py::arg("start"), py::arg("target"),
      "Exact recoloring distance, or None when unreachable.");

  m.def(
      "frozen_degree",
      [](const rekolor::Graph& g, int k, std::vector<int> colors) {
        return rekolor::frozen_degree(g, k, lift(std::move(colors), k));
      },
      py::arg("graph"), py::arg("k"), py::arg("colors"));

  m.def(
      "is_k_mixing",
      [](const rekolor::Graph& g, int k) {
        return mixing_name(rekolor::is_k_mixing(g, k));
      },
      py::arg("graph"), py::arg("k"),
      "One of 'mixing', 'not_mixing', 'empty'.");

  m.def(
      "recoloring_diameter",
      [](const rekolor::Graph& g, int k) {
        return rekolor::recoloring_diameter(g, k);
      },
      py::arg("graph"), py::arg("k"));

  m.def(
      "mixing_number_probe",
      [](const rekolor::Graph& g, int k_max) {
        return rekolor::mixing_number_probe(g, k_max);
      },
      py::arg("graph"), py::arg("k_max"));

  m.def(
      "treewidth",
      [](const rekolor::Graph& g) { return rekolor::treewidth_exact(g).treewidth; },
      py::arg("graph"));

  m.def(
      "grundy_number",
      [](const rekolor::Graph& g) { return rekolor::grundy_number_exact(g); },
      py::arg("graph"));

  m.def(
      "chromatic_number",
      [](const rekolor::Graph& g) {
        return rekolor::chromatic_number_exact(g).chromatic_number;
      },
      py::arg("graph"));

  m.def(
      "greedy_coloring",
      [](const rekolor::Graph& g, std::vector<int> order) {
        return rekolor::greedy_coloring(g, {std::move(order)}).colors();
      },
      py::arg("graph"), py::arg("order"));

  m.def("gen_complete", &rekolor::gen_complete, py::arg("n"));
  m.def("gen_path", &rekolor::gen_path, py::arg("n"));
  m.def("gen_cycle", &rekolor::gen_cycle, py::arg("n"));
  m.def("gen_star", &rekolor::gen_star, py::arg("n"));
  m.def("gen_bipartite_minus_matching",
        &rekolor::gen_bipartite_minus_matching, py::arg("n"));
  m.def(
      "gen_random_graph",
      [](int n, double p, std::uint64_t seed) {
        return rekolor::gen_random_graph(n, p, seed);
      },
      py::arg("n"), py::arg("p"), py::arg("seed"));
}
