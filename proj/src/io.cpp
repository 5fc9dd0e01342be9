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

#include "rekolor/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rekolor {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open " + path + " for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open " + path + " for writing");
  return out;
}

long parse_long(const std::string& token, std::size_t line) {
  try {
    std::size_t pos = 0;
    long value = std::stol(token, &pos);
    if (pos != token.size())
      throw parse_error("bad integer '" + token + "'", line);
    return value;
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("bad integer '" + token + "'", line);
  }
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long n = 0;
  Graph g;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) throw parse_error("duplicate 'p' line", lineno);
      if (tokens.size() != 4 || tokens[1] != "edge")
        throw parse_error("expected 'p edge <n> <m>'", lineno);
      n = parse_long(tokens[2], lineno);
      parse_long(tokens[3], lineno);  // m: informational only
      if (n < 0) throw parse_error("negative vertex count", lineno);
      g = Graph(static_cast<int>(n));
      have_header = true;
      continue;
    }
    if (kind == "e") {
      if (!have_header)
        throw parse_error("edge line before 'p edge' header", lineno);
      if (tokens.size() != 3)
        throw parse_error("expected 'e <u> <v>'", lineno);
      long u = parse_long(tokens[1], lineno);
      long v = parse_long(tokens[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw parse_error("edge endpoint out of range 1.." +
                              std::to_string(n),
                          lineno);
      if (u == v) throw parse_error("self-loop", lineno);
      g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
      continue;
    }
    throw parse_error("unrecognized line kind '" + kind + "'", lineno);
  }
  if (!have_header) throw parse_error("missing 'p edge' header");
  return g;
}

Graph read_dimacs_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_dimacs(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges())
    out << "e " << (u + 1) << " " << (v + 1) << "\n";
}

void write_dimacs_file(const std::string& path, const Graph& g) {
  auto out = open_output(path);
  write_dimacs(out, g);
}

Coloring read_coloring(std::istream& in, int n, int palette_size) {
  std::vector<int> colors;
  colors.reserve(static_cast<std::size_t>(n));
  long value = 0;
  while (static_cast<int>(colors.size()) < n && (in >> value)) {
    if (value < 1)
      throw parse_error("color " + std::to_string(value) +
                        " out of range (colors are 1-based)");
    colors.push_back(static_cast<int>(value));
  }
  if (static_cast<int>(colors.size()) < n)
    throw parse_error("expected " + std::to_string(n) +
                      " colors, got " + std::to_string(colors.size()));
  int k = palette_size;
  if (k == 0) k = std::max(1, *std::max_element(colors.begin(), colors.end()));
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] > k)
      throw input_error("color " + std::to_string(colors[i]) + " of vertex " +
                        std::to_string(i + 1) + " outside palette 1.." +
                        std::to_string(k));
  return Coloring(std::move(colors), k);
}

Coloring read_coloring_file(const std::string& path, int n,
                            int palette_size) {
  auto in = open_input(path);
  try {
    return read_coloring(in, n, palette_size);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void write_coloring(std::ostream& out, const Coloring& c) {
  for (int v = 0; v < c.size(); ++v) {
    if (v) out << " ";
    out << c.color(v);
  }
  out << "\n";
}

void write_coloring_file(const std::string& path, const Coloring& c) {
  auto out = open_output(path);
  write_coloring(out, c);
}

RecolorSequence read_sequence(std::istream& in, int n, int palette_size) {
  std::string line;
  std::size_t lineno = 0;
  // skip leading blanks
  while (std::getline(in, line)) {
    ++lineno;
    if (!split_ws(line).empty()) break;
  }
  if (split_ws(line) != std::vector<std::string>{"start"})
    throw parse_error("expected 'start' line", lineno);
  if (!std::getline(in, line))
    throw parse_error("missing start coloring line", lineno);
  ++lineno;
  std::istringstream start_stream(line);
  Coloring start = read_coloring(start_stream, n, palette_size);
  RecolorSequence seq{start, {}};
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw parse_error("expected '<vertex> <color>'", lineno);
    long v = parse_long(tokens[0], lineno);
    long c = parse_long(tokens[1], lineno);
    if (v < 1 || v > n)
      throw parse_error("step vertex out of range 1.." + std::to_string(n),
                        lineno);
    if (c < 1)
      throw parse_error("step color out of range (colors are 1-based)",
                        lineno);
    seq.steps.push_back(
        {static_cast<int>(v - 1), static_cast<int>(c)});
  }
  if (palette_size == 0) {
    int top = seq.start.palette_size();
    for (const auto& s : seq.steps) top = std::max(top, s.new_color);
    if (top > seq.start.palette_size())
      seq.start = Coloring(seq.start.colors(), top);
  }
  return seq;
}

RecolorSequence read_sequence_file(const std::string& path, int n,
                                   int palette_size) {
  auto in = open_input(path);
  try {
    return read_sequence(in, n, palette_size);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

void write_sequence(std::ostream& out, const RecolorSequence& seq) {
  out << "start\n";
  write_coloring(out, seq.start);
  for (const auto& s : seq.steps)
    out << (s.vertex + 1) << " " << s.new_color << "\n";
}

void write_sequence_file(const std::string& path,
                         const RecolorSequence& seq) {
  auto out = open_output(path);
  write_sequence(out, seq);
}

CompleteTreeDecomposition read_decomposition(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  long node_count = 0;
  long level = 0;
  CompleteTreeDecomposition t;
  std::vector<bool> seen;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "td") {
      if (have_header) throw parse_error("duplicate 'td' line", lineno);
      if (tokens.size() != 3)
        throw parse_error("expected 'td <node_count> <l>'", lineno);
      node_count = parse_long(tokens[1], lineno);
      level = parse_long(tokens[2], lineno);
      if (node_count < 0 || level < 0)
        throw parse_error("negative node count or level", lineno);
      t.tree.bags.assign(static_cast<std::size_t>(node_count), {});
      t.level = static_cast<int>(level);
      seen.assign(static_cast<std::size_t>(node_count), false);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw parse_error("'" + tokens[0] + "' line before 'td' header",
                        lineno);
    if (tokens[0] == "b") {
      if (tokens.size() < 2)
        throw parse_error("expected 'b <node_id> <v...>'", lineno);
      long id = parse_long(tokens[1], lineno);
      if (id < 1 || id > node_count)
        throw parse_error("node id out of range 1.." +
                              std::to_string(node_count),
                          lineno);
      auto idx = static_cast<std::size_t>(id - 1);
      if (seen[idx]) throw parse_error("duplicate bag for node", lineno);
      seen[idx] = true;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        long v = parse_long(tokens[i], lineno);
        if (v < 1) throw parse_error("bag vertex must be >= 1", lineno);
        t.tree.bags[idx].push_back(static_cast<int>(v - 1));
      }
      std::sort(t.tree.bags[idx].begin(), t.tree.bags[idx].end());
      t.tree.bags[idx].erase(
          std::unique(t.tree.bags[idx].begin(), t.tree.bags[idx].end()),
          t.tree.bags[idx].end());
      continue;
    }
    if (tokens[0] == "e") {
      if (tokens.size() != 3)
        throw parse_error("expected 'e <n1> <n2>'", lineno);
      long a = parse_long(tokens[1], lineno);
      long b = parse_long(tokens[2], lineno);
      if (a < 1 || a > node_count || b < 1 || b > node_count)
        throw parse_error("tree edge endpoint out of range", lineno);
      t.tree.edges.emplace_back(static_cast<int>(a - 1),
                                static_cast<int>(b - 1));
      continue;
    }
    throw parse_error("unrecognized line kind '" + tokens[0] + "'", lineno);
  }
  if (!have_header) throw parse_error("missing 'td' header");
  return t;
}

CompleteTreeDecomposition read_decomposition_file(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_decomposition(in);
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

void write_decomposition(std::ostream& out,
                         const CompleteTreeDecomposition& t) {
  out << "td " << t.tree.node_count() << " " << t.level << "\n";
  for (int u = 0; u < t.tree.node_count(); ++u) {
    out << "b " << (u + 1);
    for (int v : t.tree.bags[static_cast<std::size_t>(u)])
      out << " " << (v + 1);
    out << "\n";
  }
  for (const auto& [a, b] : t.tree.edges)
    out << "e " << (a + 1) << " " << (b + 1) << "\n";
}

void write_decomposition_file(const std::string& path,
                              const CompleteTreeDecomposition& t) {
  auto out = open_output(path);
  write_decomposition(out, t);
}

}  // namespace rekolor
