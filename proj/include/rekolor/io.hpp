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

#include <iosfwd>
#include <string>

#include "rekolor/decomp.hpp"
#include "rekolor/graph.hpp"

namespace rekolor {

// DIMACS .col: header "p edge <n> <m>", edges "e <u> <v>" (1-based),
// comments "c ...". Duplicate edges collapse; m is trusted only loosely
// (a mismatch is not an error, the edge list wins).
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const Graph& g);
void write_dimacs_file(const std::string& path, const Graph& g);

// Coloring file: n whitespace-separated integers in vertex order.
// palette_size 0 means "infer as max color seen" (at least 1).
Coloring read_coloring(std::istream& in, int n, int palette_size = 0);
Coloring read_coloring_file(const std::string& path, int n,
                            int palette_size = 0);
void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring_file(const std::string& path, const Coloring& c);

// Sequence file: line "start", then the start coloring on one line, then
// one "<vertex> <color>" line per step with 1-based vertex ids.
RecolorSequence read_sequence(std::istream& in, int n, int palette_size = 0);
RecolorSequence read_sequence_file(const std::string& path, int n,
                                   int palette_size = 0);
void write_sequence(std::ostream& out, const RecolorSequence& seq);
void write_sequence_file(const std::string& path,
                         const RecolorSequence& seq);

// Decomposition file: "td <node_count> <l>", then "b <node_id> <v...>"
// per node, then tree edges "e <n1> <n2>". Node ids and vertex ids are
// 1-based on disk, 0-based in memory.
CompleteTreeDecomposition read_decomposition(std::istream& in);
CompleteTreeDecomposition read_decomposition_file(const std::string& path);
void write_decomposition(std::ostream& out,
                         const CompleteTreeDecomposition& t);
void write_decomposition_file(const std::string& path,
                              const CompleteTreeDecomposition& t);

}  // namespace rekolor
