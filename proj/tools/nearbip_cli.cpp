// nearbip: command-line front end for the solvers, generators, gadgets and
// oracles. Exit codes: 0 yes / success, 1 no / mismatch, 2 error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "nearbip/detect.hpp"
#include "nearbip/fuzz.hpp"
#include "nearbip/gadgets.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/graph_io.hpp"
#include "nearbip/ifvs.hpp"
#include "nearbip/lsac.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/transform.hpp"

namespace {

using namespace nearbip;
using Json = nlohmann::ordered_json;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Input {
  std::string path;
  std::string inline_text;
  std::string format = "edgelist";
};

GraphFormat format_of(const std::string& f) { return f == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList; }

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Graph read_graph(const Input& in) {
  if (!in.inline_text.empty()) return parse_graph(in.inline_text, format_of(in.format));
  if (in.path.empty()) throw std::runtime_error("no input graph (give a path, '-' or --inline)");
  return parse_graph(slurp(in.path), format_of(in.format));
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Graph file, or '-' for stdin");
  cmd->add_option("--inline", in.inline_text, "Graph given directly on the command line");
  cmd->add_option("--format", in.format, "Graph format")->check(CLI::IsMember({"edgelist", "graph6"}));
}

std::string join_path(const std::vector<Vertex>& p, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? sep : "") + std::to_string(p[i]);
  return s;
}

std::string join_set(const VertexSet& s) { return "{" + join_path(s, ",") + "}"; }

void print_json(const Json& j) { std::cout << j.dump() << "\n"; }

// solve ---------------------------------------------------------------------

struct SolveArgs {
  Input input;
  std::string problem = "nb";
  std::string objective = "min";
  std::optional<long long> k;
  std::string lists_path;
  bool unchecked = false;
  bool parallel = false;
  bool json = false;
  bool timing = false;
};

int run_solve_lsac(const SolveArgs& a, const Graph& g) {
  const ListAssignment lists = a.lists_path.empty() ? full_lists(g.order()) : parse_lists(slurp(a.lists_path), g.order());
  LsacStats stats;
  LsacOptions o{ColouringMode::SemiAcyclic, !a.unchecked, a.parallel};
  const auto c = solve_lsac(g, lists, o, &stats);
  if (a.json) {
    Json j;
    j["verdict"] = c ? "yes" : "no";
    j["colouring"] = c ? Json(*c) : Json(nullptr);
    j["stats"] = {{"s_colourings", stats.s_colourings}, {"nodes", stats.nodes}, {"leaves", stats.leaves}};
    print_json(j);
  } else if (c) {
    std::cout << "yes\n";
    for (int v = 0; v < g.order(); ++v) std::cout << v << ": " << (*c)[v] << "\n";
  } else {
    std::cout << "no\n";
  }
  return c ? kYes : kNo;
}

int run_solve(const SolveArgs& a) {
  const Graph g = read_graph(a.input);
  if (a.problem == "lsac") return run_solve_lsac(a, g);
  if (a.k && *a.k < 0) throw CLI::ValidationError("--k", "must be non-negative");
  const SolveOptions opts{!a.unchecked, a.parallel};
  SolveResult r;
  if (a.problem == "nb") {
    r = is_near_bipartite(g, opts);
  } else if (a.problem == "ioct") {
    r = a.k ? ioct_decision(g, *a.k, opts) : min_ioct(g, opts);
  } else if (a.objective == "max") {
    r = max_ifvs(g, opts);
    if (a.k && r.verdict && *r.size < *a.k) r = SolveResult{false, {}, {}, r.stats};
  } else if (a.objective == "exact") {
    if (!a.k) throw CLI::ValidationError("--objective exact", "requires --k");
    r = ifvs_exact_size(g, *a.k, opts);
  } else {
    r = a.k ? ifvs_decision(g, *a.k, opts) : min_ifvs(g, opts);
  }
  if (a.json) {
    print_json(to_json(r, a.timing));
  } else if (r.verdict) {
    std::cout << "yes size=" << *r.size << " witness=" << join_set(*r.witness) << "\n";
    const auto& s = r.stats.search;
    std::cout << "stats: s_colourings=" << s.s_colourings << " nodes=" << s.nodes << " leaves=" << s.leaves
              << " troublesome=" << r.stats.troublesome << "\n";
    if (a.timing) std::cout << "wall_seconds=" << r.stats.wall_seconds << "\n";
  } else {
    std::cout << "no\n";
  }
  return r.verdict ? kYes : kNo;
}

// check ---------------------------------------------------------------------

struct CheckArgs {
  Input input;
  std::string property;
  bool json = false;
};

int run_check(const CheckArgs& a) {
  const Graph g = read_graph(a.input);
  bool holds = true;
  std::vector<Vertex> witness;
  std::string kind;
  if (a.property == "p5free") {
    if (auto p = find_induced_path(g, 5)) holds = false, witness = *p, kind = "induced P5";
  } else if (a.property == "clawfree") {
    if (auto c = find_induced_claw(g)) holds = false, witness.assign(c->begin(), c->end()), kind = "claw (centre first)";
  } else if (a.property == "k4free") {
    if (auto c = find_k4(g)) holds = false, witness.assign(c->begin(), c->end()), kind = "K4";
  } else if (a.property == "bipartite") {
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), 0);
    if (auto c = find_odd_cycle(g, all)) holds = false, witness = *c, kind = "odd cycle";
  } else {
    holds = is_forest(g);
    kind = "cycle";
  }
  if (a.json) {
    Json j;
    j["property"] = a.property;
    j["holds"] = holds;
    j["witness"] = holds || witness.empty() ? Json(nullptr) : Json(witness);
    print_json(j);
  } else if (holds) {
    std::cout << "yes\n";
  } else if (witness.empty()) {
    std::cout << "no\n";
  } else {
    std::cout << "no, " << kind << " " << join_path(witness, "-") << "\n";
  }
  return holds ? kYes : kNo;
}

// generate ------------------------------------------------------------------

struct GenerateArgs {
  std::string family;
  std::string arg;
  int n = 10;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string p5_family = "any";
  std::string format = "edgelist";
};

int run_generate(const GenerateArgs& a) {
  auto size = [&] { return a.arg.empty() ? a.n : std::stoi(a.arg); };
  Graph g;
  if (a.family == "path") g = path_graph(size());
  else if (a.family == "cycle") g = cycle_graph(size());
  else if (a.family == "complete") g = complete_graph(size());
  else if (a.family == "star") g = star_graph(size());
  else if (a.family == "random") g = random_graph(size(), a.p, a.seed);
  else if (a.family == "p5free-random") g = random_p5free_graph(size(), a.seed, parse_family(a.p5_family));
  else if (a.family == "named") g = named_graph(a.arg);
  else g = line_graph(named_graph(a.arg)).graph;  // linegraph-of
  std::cout << emit_graph(g, format_of(a.format));
  return kYes;
}

// reduce --------------------------------------------------------------------

struct ReduceArgs {
  std::string gadget;
  Input input;
  std::vector<int> edge;
  int rounds = 1;
  std::string lists_out;
};

void emit_with_comments(const Graph& g, const std::vector<std::string>& comments, const std::string& format) {
  if (format == "graph6") {
    std::cout << emit_graph6(g);
    for (const auto& c : comments) std::cerr << "# " << c << "\n";
    return;
  }
  for (const auto& c : comments) std::cout << "# " << c << "\n";
  std::cout << emit_edgelist(g);
}

int run_reduce(const ReduceArgs& a) {
  if (a.gadget == "sat") {
    const std::string text = a.input.inline_text.empty() ? slurp(a.input.path) : a.input.inline_text;
    CnfFormula phi = parse_dimacs(text);
    if (!is_normalized(phi)) phi = normalize(phi);
    const GadgetOutput out = sat_to_lsac(phi);
    std::vector<std::string> comments{"list semi-acyclic 3-colouring instance of the formula"};
    std::istringstream dimacs(emit_dimacs(phi));
    for (std::string line; std::getline(dimacs, line);) comments.push_back("cnf " + line);
    for (auto& d : out.describe()) comments.push_back(std::move(d));
    const std::string lists = emit_lists(*out.lists);
    if (a.lists_out.empty()) {
      std::istringstream ls(lists);
      for (std::string line; std::getline(ls, line);) comments.push_back("list " + line);
    } else {
      std::ofstream(a.lists_out) << lists;
    }
    emit_with_comments(out.graph, comments, a.input.format);
    return kYes;
  }
  const Graph g = read_graph(a.input);
  if (a.gadget == "subdivide") {
    emit_with_comments(subdivision_chain(g, a.rounds), {"subdivided " + std::to_string(a.rounds) + " times"},
                       a.input.format);
    return kYes;
  }
  if (g.edge_count() == 0) throw std::runtime_error("graph has no edges");
  Edge e = g.edges().front();
  if (a.edge.size() == 2) e = {a.edge[0], a.edge[1]};
  const GadgetOutput out = hamilton_gadget(g, e);
  std::vector<std::string> comments{"line graph; near-bipartite iff a Hamilton cycle uses the removed edge"};
  for (auto& d : out.describe()) comments.push_back(std::move(d));
  emit_with_comments(out.graph, comments, a.input.format);
  return kYes;
}

// oracle --------------------------------------------------------------------

struct OracleArgs {
  Input input;
  std::string problem = "ifvs";
  std::string lists_path;
  std::vector<int> edge;
  bool json = false;
};

int run_oracle(const OracleArgs& a) {
  const Graph g = read_graph(a.input);
  Json j;
  bool yes = false;
  if (a.problem == "lsac") {
    const ListAssignment lists =
        a.lists_path.empty() ? full_lists(g.order()) : parse_lists(slurp(a.lists_path), g.order());
    const auto c = oracle::brute_lsac(g, lists);
    yes = c.has_value();
    j["colouring"] = c ? Json(*c) : Json(nullptr);
  } else if (a.problem == "hamilton") {
    if (a.edge.size() != 2) throw CLI::ValidationError("--edge", "hamilton needs --edge U V");
    yes = oracle::brute_hamilton_through_edge(g, {a.edge[0], a.edge[1]});
  } else if (a.problem == "fvs") {
    const auto r = oracle::brute_min_fvs(g);
    yes = true;
    j["size"] = r.size;
    j["witness"] = r.set;
  } else {
    std::optional<oracle::SetResult> r;
    if (a.problem == "ioct") r = oracle::brute_min_ioct(g);
    else if (a.problem == "max-ifvs") r = oracle::brute_max_ifvs(g);
    else r = oracle::brute_min_ifvs(g);
    yes = r.has_value();
    if (a.problem != "nb") {
      j["size"] = r ? Json(r->size) : Json(nullptr);
      j["witness"] = r ? Json(r->set) : Json(nullptr);
    }
  }
  Json out;
  out["verdict"] = yes ? "yes" : "no";
  out.update(j);
  if (a.json) {
    print_json(out);
  } else {
    std::cout << (yes ? "yes" : "no");
    if (out.contains("size") && !out["size"].is_null()) std::cout << " size=" << out["size"].get<int>();
    if (out.contains("witness") && !out["witness"].is_null())
      std::cout << " witness=" << join_set(out["witness"].get<VertexSet>());
    std::cout << "\n";
    if (out.contains("colouring") && !out["colouring"].is_null()) {
      const auto c = out["colouring"].get<Coloring>();
      for (std::size_t v = 0; v < c.size(); ++v) std::cout << v << ": " << c[v] << "\n";
    }
  }
  return yes ? kYes : kNo;
}

// fuzz ----------------------------------------------------------------------

struct FuzzArgs {
  std::string problem = "ifvs";
  int iterations = 100;
  int min_n = 3;
  int max_n = 12;
  std::uint64_t seed = 1;
  std::string family = "any";
  std::string format = "edgelist";
  bool json = false;
};

int run_fuzz(const FuzzArgs& a) {
  FuzzConfig cfg{parse_problem(a.problem), a.iterations, a.min_n, a.max_n, a.seed, parse_family(a.family)};
  const FuzzReport r = fuzz(cfg);
  if (a.json) {
    Json j;
    j["problem"] = a.problem;
    j["iterations"] = r.iterations;
    j["oracle_yes"] = r.yes;
    j["mismatches"] = r.mismatches;
    j["detail"] = r.detail;
    j["counterexample"] = r.counterexample ? Json(emit_graph(*r.counterexample, format_of(a.format))) : Json(nullptr);
    print_json(j);
  } else {
    std::cout << r.iterations << " iterations, " << r.yes << " oracle yes, " << r.mismatches << " mismatches\n";
    if (r.counterexample) std::cout << r.detail << "\n" << emit_graph(*r.counterexample, format_of(a.format));
  }
  return r.mismatches == 0 ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-bipartiteness, independent feedback vertex sets and odd cycle transversals of P5-free graphs"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve a problem on a graph");
  add_input(s, solve.input);
  s->add_option("--problem", solve.problem)->check(CLI::IsMember({"nb", "ifvs", "ioct", "lsac"}));
  s->add_option("--objective", solve.objective, "For ifvs")->check(CLI::IsMember({"min", "max", "exact"}));
  s->add_option("--k", solve.k, "Size bound (at most k; exactly k with --objective exact)");
  s->add_option("--lists", solve.lists_path, "List file for --problem lsac");
  s->add_flag("--unchecked", solve.unchecked, "Skip the induced-P5 test");
  s->add_flag("--parallel", solve.parallel, "Explore branches concurrently");
  s->add_flag("--json", solve.json, "Emit a JSON record");
  s->add_flag("--timing", solve.timing, "Report wall time");

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Test a structural property");
  c->add_option("property", check.property)
      ->required()
      ->check(CLI::IsMember({"p5free", "clawfree", "k4free", "bipartite", "forest"}));
  add_input(c, check.input);
  c->add_flag("--json", check.json);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Emit a graph");
  g->add_option("kind", gen.family, "Graph family")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "star", "random", "p5free-random", "linegraph-of", "named"}));
  g->add_option("arg", gen.arg, "Order, or a graph name for named/linegraph-of");
  g->add_option("--n", gen.n);
  g->add_option("--p", gen.p, "Edge probability for random");
  g->add_option("--seed", gen.seed);
  g->add_option("--family", gen.p5_family, "any, cograph, split, multipartite, growth, rejection, perturbed-cograph");
  g->add_option("--format", gen.format)->check(CLI::IsMember({"edgelist", "graph6"}));

  ReduceArgs red;
  auto* r = app.add_subcommand("reduce", "Build a hardness gadget");
  r->add_option("gadget", red.gadget)->required()->check(CLI::IsMember({"sat", "hamilton", "subdivide"}));
  add_input(r, red.input);
  r->add_option("--edge", red.edge, "Edge U V for hamilton")->expected(2);
  r->add_option("--rounds", red.rounds);
  r->add_option("--lists-out", red.lists_out, "Write the sat gadget's lists here");

  OracleArgs orc;
  auto* o = app.add_subcommand("oracle", "Brute-force answer for a small instance");
  add_input(o, orc.input);
  o->add_option("--problem", orc.problem)
      ->check(CLI::IsMember({"nb", "ifvs", "max-ifvs", "ioct", "fvs", "lsac", "hamilton"}));
  o->add_option("--lists", orc.lists_path);
  o->add_option("--edge", orc.edge)->expected(2);
  o->add_flag("--json", orc.json);

  FuzzArgs fz;
  auto* f = app.add_subcommand("fuzz", "Compare a solver with its oracle on random P5-free graphs");
  f->add_option("--problem", fz.problem)->check(CLI::IsMember({"nb", "ifvs", "ioct"}));
  f->add_option("--iterations", fz.iterations);
  f->add_option("--min-n", fz.min_n);
  f->add_option("--max-n", fz.max_n);
  f->add_option("--seed", fz.seed);
  f->add_option("--family", fz.family);
  f->add_option("--format", fz.format)->check(CLI::IsMember({"edgelist", "graph6"}));
  f->add_flag("--json", fz.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*s) return run_solve(solve);
    if (*c) return run_check(check);
    if (*g) return run_generate(gen);
    if (*r) return run_reduce(red);
    if (*o) return run_oracle(orc);
    return run_fuzz(fz);
  } catch (const NotP5Free& e) {
    std::cerr << "error: input has an induced P5: " << join_path(e.witness(), "-") << "\n";
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
