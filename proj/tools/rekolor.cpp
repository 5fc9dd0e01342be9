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

// Command line front end: recolor, verify, stats, gen, rk-dump.
//
// Exit codes: 0 success, 1 internal error, 2 bad input or unmet engine
// precondition, 3 unparseable file, 4 resource guard tripped, 5 invalid
// recoloring sequence.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rekolor/decomp.hpp"
#include "rekolor/errors.hpp"
#include "rekolor/generators.hpp"
#include "rekolor/graph.hpp"
#include "rekolor/grundy.hpp"
#include "rekolor/io.hpp"
#include "rekolor/oracle.hpp"
#include "rekolor/twrecolor.hpp"

namespace {

using rekolor::Coloring;
using rekolor::CompleteTreeDecomposition;
using rekolor::Graph;
using rekolor::RecolorSequence;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitParse = 3;
constexpr int kExitGuard = 4;
constexpr int kExitInvalid = 5;

struct RunReport {
  std::string engine;
  int n = 0;
  int m = 0;
  int k = 0;
  std::optional<int> treewidth;
  std::optional<int> grundy_number;
  std::optional<std::int64_t> raw_length;
  std::optional<std::int64_t> elided_length;
  std::optional<std::vector<int>> per_vertex_counts;
  std::optional<std::int64_t> bound;
  bool oracle_ran = false;
  std::optional<std::int64_t> oracle_distance;  // empty + oracle_ran: infinite
  double wall_ms = 0.0;
};

std::string format_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", ms);
  return buf;
}

nlohmann::ordered_json report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["engine"] = r.engine;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["treewidth"] = r.treewidth ? nlohmann::ordered_json(*r.treewidth)
                               : nlohmann::ordered_json(nullptr);
  j["grundy_number"] = r.grundy_number
                           ? nlohmann::ordered_json(*r.grundy_number)
                           : nlohmann::ordered_json(nullptr);
  j["raw_length"] = r.raw_length ? nlohmann::ordered_json(*r.raw_length)
                                 : nlohmann::ordered_json(nullptr);
  j["elided_length"] = r.elided_length
                           ? nlohmann::ordered_json(*r.elided_length)
                           : nlohmann::ordered_json(nullptr);
  j["per_vertex_counts"] = r.per_vertex_counts
                               ? nlohmann::ordered_json(*r.per_vertex_counts)
                               : nlohmann::ordered_json(nullptr);
  j["bound"] = r.bound ? nlohmann::ordered_json(*r.bound)
                       : nlohmann::ordered_json(nullptr);
  if (r.oracle_ran)
    j["oracle_distance"] = r.oracle_distance
                               ? nlohmann::ordered_json(*r.oracle_distance)
                               : nlohmann::ordered_json("infinity");
  else
    j["oracle_distance"] = nullptr;
  j["wall_ms"] = r.wall_ms;
  return j;
}

void emit_report(std::ostream& os, const RunReport& r,
                 const std::string& fmt) {
  if (fmt == "json") {
    os << report_json(r).dump(2) << "\n";
    return;
  }
  os << "engine: " << r.engine << "\n";
  os << "n: " << r.n << "\n";
  os << "m: " << r.m << "\n";
  os << "k: " << r.k << "\n";
  if (r.treewidth) os << "treewidth: " << *r.treewidth << "\n";
  if (r.grundy_number) os << "grundy_number: " << *r.grundy_number << "\n";
  if (r.raw_length) os << "raw_length: " << *r.raw_length << "\n";
  if (r.elided_length) os << "elided_length: " << *r.elided_length << "\n";
  if (r.per_vertex_counts) {
    os << "per_vertex_counts:";
    for (int c : *r.per_vertex_counts) os << " " << c;
    os << "\n";
  }
  if (r.bound) os << "bound: " << *r.bound << "\n";
  if (r.oracle_ran) {
    os << "oracle_distance: ";
    if (r.oracle_distance)
      os << *r.oracle_distance << "\n";
    else
      os << "infinity\n";
  }
  os << "wall_ms: " << format_ms(r.wall_ms) << "\n";
}

// Shortest path in R_k(G) by BFS with parent tracking over the fully
// enumerated oracle. Caller guarantees a and b share a component.
RecolorSequence oracle_path(const Graph& g, int k, const Coloring& a,
                            const Coloring& b) {
  rekolor::RecoloringGraphOracle orc(g, k);
  auto sa = orc.state_index(a);
  auto sb = orc.state_index(b);
  rekolor::detail::check_invariant(sa.has_value() && sb.has_value(),
                                   "oracle path endpoints not enumerated");
  std::vector<std::int64_t> parent(orc.state_count(), -2);
  std::queue<std::size_t> frontier;
  parent[*sa] = -1;
  frontier.push(*sa);
  while (!frontier.empty() && parent[*sb] == -2) {
    std::size_t cur = frontier.front();
    frontier.pop();
    const std::vector<int>& cols = orc.states()[cur];
    for (int v = 0; v < g.vertex_count(); ++v) {
      for (int c = 1; c <= k; ++c) {
        if (c == cols[v]) continue;
        std::vector<int> next = cols;
        next[v] = c;
        auto id = orc.state_index(Coloring(next, k));
        if (id && parent[*id] == -2) {
          parent[*id] = static_cast<std::int64_t>(cur);
          frontier.push(*id);
        }
      }
    }
  }
  rekolor::detail::check_invariant(parent[*sb] != -2,
                                   "oracle path target unreached");
  std::vector<std::size_t> chain;
  for (std::int64_t cur = static_cast<std::int64_t>(*sb); cur != -1;
       cur = parent[cur])
    chain.push_back(static_cast<std::size_t>(cur));
  std::reverse(chain.begin(), chain.end());
  RecolorSequence seq{a, {}};
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const std::vector<int>& prev = orc.states()[chain[i - 1]];
    const std::vector<int>& next = orc.states()[chain[i]];
    for (int v = 0; v < g.vertex_count(); ++v)
      if (prev[v] != next[v]) seq.steps.push_back({v, next[v]});
  }
  return seq;
}

struct RecolorOptions {
  std::string graph_path;
  std::string start_path;
  std::string target_path;
  std::string method = "tw";
  int k = 0;  // 0: infer from the colorings
  std::uint64_t seed = 0;
  std::string out_path;
  std::string report_fmt = "text";
  std::string td_path;
  bool with_oracle = false;
};

// Rebuild a file-sourced coloring on the palette 1..k, reporting any
// out-of-palette color with the file path and a 1-based vertex id.
Coloring lift_to_palette(const std::string& path, const Coloring& c, int k) {
  const std::vector<int>& colors = c.colors();
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] > k)
      throw rekolor::input_error(
          path + ": color " + std::to_string(colors[i]) + " of vertex " +
          std::to_string(i + 1) + " outside palette 1.." + std::to_string(k));
  return Coloring(colors, k);
}

int cmd_recolor(const RecolorOptions& opt) {
  Graph g = rekolor::read_dimacs_file(opt.graph_path);
  int n = g.vertex_count();
  Coloring a0 = rekolor::read_coloring_file(opt.start_path, n);
  Coloring b0 = rekolor::read_coloring_file(opt.target_path, n);
  int k = opt.k > 0 ? opt.k
                    : std::max({a0.max_color(), b0.max_color(), 1});
  Coloring a = lift_to_palette(opt.start_path, a0, k);
  Coloring b = lift_to_palette(opt.target_path, b0, k);
  if (!rekolor::is_proper(g, a))
    throw rekolor::input_error("start coloring is not proper");
  if (!rekolor::is_proper(g, b))
    throw rekolor::input_error("target coloring is not proper");

  RunReport rep;
  rep.engine = opt.method;
  rep.n = n;
  rep.m = g.edge_count();
  rep.k = k;

  auto t0 = std::chrono::steady_clock::now();
  std::optional<RecolorSequence> seq;
  if (n == 0) {
    seq = RecolorSequence{a, {}};
    rep.bound = 0;
  } else if (opt.method == "tw") {
    CompleteTreeDecomposition t;
    if (!opt.td_path.empty()) {
      t = rekolor::read_decomposition_file(opt.td_path);
    } else {
      rekolor::TreewidthResult r = rekolor::treewidth_exact(g);
      t = rekolor::make_complete(g, r.decomposition, r.treewidth);
    }
    rep.treewidth = t.level;
    if (k < t.level + 2)
      throw rekolor::input_error(
          "tw engine needs k >= " + std::to_string(t.level + 2) +
          " for this decomposition, got " + std::to_string(k));
    seq = rekolor::tw_recolor(g, t, k, a, b);
    rep.bound = 2LL * (static_cast<std::int64_t>(n) * n + n);
  } else if (opt.method == "grundy") {
    int cg = rekolor::grundy_number_exact(g);
    rep.grundy_number = cg;
    if (k < cg + 1)
      throw rekolor::input_error(
          "grundy engine needs k >= " + std::to_string(cg + 1) + ", got " +
          std::to_string(k));
    seq = rekolor::grundy_recolor(g, k, a, b);
    rep.bound = 4LL * cg * n;
  } else {
    auto dist = rekolor::oracle_distance(g, k, a, b);
    rep.oracle_ran = true;
    rep.oracle_distance = dist;
    if (dist) seq = oracle_path(g, k, a, b);
  }
  if (opt.with_oracle && !rep.oracle_ran) {
    rep.oracle_ran = true;
    rep.oracle_distance = rekolor::oracle_distance(g, k, a, b);
  }
  auto t1 = std::chrono::steady_clock::now();
  rep.wall_ms =
      std::chrono::duration<double, std::milli>(t1 - t0).count();

  if (seq) {
    Coloring fin = rekolor::validate_sequence(g, *seq);
    rekolor::detail::check_invariant(fin == b,
                                     "sequence does not end at the target");
    rep.raw_length = static_cast<std::int64_t>(seq->length());
    rep.elided_length = static_cast<std::int64_t>(
        rekolor::simplified_sequence(g, *seq).length());
    rep.per_vertex_counts = rekolor::per_vertex_recolor_counts(*seq, n);
    if (!opt.out_path.empty())
      rekolor::write_sequence_file(opt.out_path, *seq);
    else
      rekolor::write_sequence(std::cout, *seq);
  }
  // The sequence owns stdout when no --out is given.
  emit_report(opt.out_path.empty() ? std::cerr : std::cout, rep,
              opt.report_fmt);
  return kExitOk;
}

struct StatsOptions {
  std::string graph_path;
  bool exact_tw = false;
  bool exact_grundy = false;
  bool exact_chromatic = false;
};

int cmd_stats(const StatsOptions& opt) {
  Graph g = rekolor::read_dimacs_file(opt.graph_path);
  bool all = !opt.exact_tw && !opt.exact_grundy && !opt.exact_chromatic;
  std::cout << "n: " << g.vertex_count() << "\n";
  std::cout << "m: " << g.edge_count() << "\n";
  std::cout << "max_degree: " << g.max_degree() << "\n";
  if (all || opt.exact_tw) {
    rekolor::TreewidthResult r = rekolor::treewidth_exact(g);
    std::cout << "treewidth: " << r.treewidth << "\n";
    std::cout << "tw_engine_min_k: " << r.treewidth + 2 << "\n";
  }
  if (all || opt.exact_chromatic) {
    rekolor::ChromaticInfo c = rekolor::chromatic_number_exact(g);
    std::cout << "chromatic_number: " << c.chromatic_number << "\n";
  }
  if (all || opt.exact_grundy) {
    int cg = rekolor::grundy_number_exact(g);
    std::cout << "grundy_number: " << cg << "\n";
    std::cout << "grundy_engine_min_k: " << cg + 1 << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string graph_path;
  std::string sequence_path;
  int k = 0;
};

int cmd_verify(const VerifyOptions& opt) {
  Graph g = rekolor::read_dimacs_file(opt.graph_path);
  RecolorSequence seq =
      rekolor::read_sequence_file(opt.sequence_path, g.vertex_count(), opt.k);
  try {
    Coloring fin = rekolor::validate_sequence(g, seq);
    std::cout << "valid\n";
    rekolor::write_coloring(std::cout, fin);
    return kExitOk;
  } catch (const rekolor::validation_error& e) {
    std::cerr << "invalid sequence: " << e.what() << "\n";
    if (e.step() == rekolor::validation_error::npos)
      std::cout << "failing_step: start\n";
    else
      std::cout << "failing_step: " << e.step() << "\n";
    return kExitInvalid;
  }
}

struct GenOptions {
  std::string family;
  int n = 4;
  int width = 2;
  double p = 1.0;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string td_out_path;
};

int cmd_gen(const GenOptions& opt) {
  Graph g;
  std::optional<CompleteTreeDecomposition> td;
  if (opt.family == "complete") {
    g = rekolor::gen_complete(opt.n);
  } else if (opt.family == "path") {
    g = rekolor::gen_path(opt.n);
  } else if (opt.family == "cycle") {
    g = rekolor::gen_cycle(opt.n);
  } else if (opt.family == "star") {
    g = rekolor::gen_star(opt.n);
  } else if (opt.family == "bipartite-mm") {
    g = rekolor::gen_bipartite_minus_matching(opt.n);
  } else if (opt.family == "ktree") {
    rekolor::PartialKTree pk =
        rekolor::gen_partial_ktree(opt.n, opt.width, opt.p, opt.seed);
    g = pk.graph;
    td = pk.decomposition;
  } else if (opt.family == "random") {
    g = rekolor::gen_random_graph(opt.n, opt.p, opt.seed);
  } else {
    throw rekolor::input_error("unknown family: " + opt.family);
  }
  if (!opt.td_out_path.empty()) {
    if (!td)
      throw rekolor::input_error(
          "--td-out only applies to the ktree family");
    rekolor::write_decomposition_file(opt.td_out_path, *td);
  }
  if (!opt.out_path.empty())
    rekolor::write_dimacs_file(opt.out_path, g);
  else
    rekolor::write_dimacs(std::cout, g);
  return kExitOk;
}

struct RkDumpOptions {
  std::string graph_path;
  int k = 0;
  std::string out_path;
};

int cmd_rk_dump(const RkDumpOptions& opt) {
  Graph g = rekolor::read_dimacs_file(opt.graph_path);
  rekolor::RecoloringGraphOracle orc(g, opt.k);
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out)
      throw rekolor::input_error("cannot open for writing: " + opt.out_path);
    orc.dump_edges(out);
  } else {
    orc.dump_edges(std::cout);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "rekolor: certified step-by-step transformations between proper "
      "k-colorings"};
  app.require_subcommand(1);

  RecolorOptions rec_opt;
  CLI::App* rec =
      app.add_subcommand("recolor", "produce a certified recoloring sequence");
  rec->add_option("graph", rec_opt.graph_path, "graph file (DIMACS .col)")
      ->required();
  rec->add_option("start", rec_opt.start_path, "start coloring file")
      ->required();
  rec->add_option("target", rec_opt.target_path, "target coloring file")
      ->required();
  rec->add_option("--method", rec_opt.method, "engine: tw, grundy or oracle")
      ->check(CLI::IsMember({"tw", "grundy", "oracle"}));
  rec->add_option("--k", rec_opt.k,
                  "palette size (default: largest color in the inputs)")
      ->check(CLI::PositiveNumber);
  rec->add_option("--seed", rec_opt.seed,
                  "recorded for reproducibility; every engine is "
                  "deterministic");
  rec->add_option("--out", rec_opt.out_path,
                  "sequence file path; without it the sequence goes to "
                  "stdout and the report to stderr");
  rec->add_option("--report", rec_opt.report_fmt, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  rec->add_option("--td", rec_opt.td_path,
                  "use this decomposition file instead of computing one "
                  "(tw method only)");
  rec->add_flag("--with-oracle", rec_opt.with_oracle,
                "also compute the exact distance (exponential in n)");

  StatsOptions st_opt;
  CLI::App* st = app.add_subcommand(
      "stats", "print graph parameters and engine preconditions");
  st->add_option("graph", st_opt.graph_path, "graph file (DIMACS .col)")
      ->required();
  st->add_flag("--exact-tw", st_opt.exact_tw, "exact treewidth");
  st->add_flag("--exact-grundy", st_opt.exact_grundy, "exact grundy number");
  st->add_flag("--exact-chromatic", st_opt.exact_chromatic,
               "exact chromatic number");

  VerifyOptions ver_opt;
  CLI::App* ver =
      app.add_subcommand("verify", "replay a sequence and check every step");
  ver->add_option("graph", ver_opt.graph_path, "graph file (DIMACS .col)")
      ->required();
  ver->add_option("sequence", ver_opt.sequence_path, "sequence file")
      ->required();
  ver->add_option("--k", ver_opt.k,
                  "palette size (default: largest color in the file)")
      ->check(CLI::PositiveNumber);

  GenOptions gen_opt;
  CLI::App* gn = app.add_subcommand("gen", "write a sample graph");
  gn->add_option("family", gen_opt.family,
                 "complete, path, cycle, star, bipartite-mm, ktree, random")
      ->required();
  gn->add_option("--n", gen_opt.n,
                 "vertex count (side size for bipartite-mm)");
  gn->add_option("--width", gen_opt.width, "bag size minus one (ktree)");
  gn->add_option("--p", gen_opt.p, "edge keep probability (ktree, random)");
  gn->add_option("--seed", gen_opt.seed, "rng seed (ktree, random)");
  gn->add_option("--out", gen_opt.out_path, "graph output path");
  gn->add_option("--td-out", gen_opt.td_out_path,
                 "decomposition output path (ktree)");

  RkDumpOptions rk_opt;
  CLI::App* rk = app.add_subcommand(
      "rk-dump", "dump the recoloring graph as a state edge list");
  rk->add_option("graph", rk_opt.graph_path, "graph file (DIMACS .col)")
      ->required();
  rk->add_option("--k", rk_opt.k, "palette size")
      ->required()
      ->check(CLI::PositiveNumber);
  rk->add_option("--out", rk_opt.out_path, "edge list path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (rec->parsed()) return cmd_recolor(rec_opt);
    if (st->parsed()) return cmd_stats(st_opt);
    if (ver->parsed()) return cmd_verify(ver_opt);
    if (gn->parsed()) return cmd_gen(gen_opt);
    if (rk->parsed()) return cmd_rk_dump(rk_opt);
    return kExitInternal;
  } catch (const rekolor::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const rekolor::resource_error& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const rekolor::validation_error& e) {
    std::cerr << "invalid sequence: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const rekolor::invariant_violation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const rekolor::input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
