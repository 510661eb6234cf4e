#include "nearbip/gadgets.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "nearbip/graph_io.hpp"
#include "nearbip/transform.hpp"

namespace nearbip {

namespace {

void check_literals(const CnfFormula& phi) {
  for (const auto& cl : phi.clauses)
    for (int lit : cl)
      if (lit == 0 || std::abs(lit) > phi.var_count)
        throw ContractViolation("literal " + std::to_string(lit) + " outside 1.." + std::to_string(phi.var_count));
}

}  // namespace

CnfFormula normalize(const CnfFormula& phi) {
  check_literals(phi);
  std::vector<std::vector<int>> clauses;
  for (const auto& cl : phi.clauses) {
    std::vector<int> out;
    bool tautology = false;
    for (int lit : cl) {
      if (std::find(out.begin(), out.end(), -lit) != out.end()) tautology = true;
      if (std::find(out.begin(), out.end(), lit) == out.end()) out.push_back(lit);
    }
    if (!tautology) clauses.push_back(std::move(out));
  }
  // Sets literal `lit` true: drops satisfied clauses and removes -lit.
  auto assign = [&](int lit) {
    std::vector<std::vector<int>> next;
    for (auto& cl : clauses) {
      if (std::find(cl.begin(), cl.end(), lit) != cl.end()) continue;
      std::erase(cl, -lit);
      if (cl.empty()) throw NormalizationError("unit propagation derives the empty clause");
      next.push_back(std::move(cl));
    }
    clauses = std::move(next);
  };
  for (const auto& cl : clauses)
    if (cl.empty()) throw NormalizationError("formula contains an empty clause");
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& cl : clauses)
      if (cl.size() == 1) {
        assign(cl.front());
        changed = true;
        break;
      }
    if (changed) continue;
    std::vector<int> polarity(phi.var_count + 1, 0);  // bit 0 positive, bit 1 negative
    for (const auto& cl : clauses)
      for (int lit : cl) polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
    for (int x = 1; x <= phi.var_count; ++x)
      if (polarity[x] == 1 || polarity[x] == 2) {
        assign(polarity[x] == 1 ? x : -x);
        changed = true;
        break;
      }
  }
  return CnfFormula{phi.var_count, std::move(clauses)};
}

bool is_normalized(const CnfFormula& phi) {
  check_literals(phi);
  std::vector<int> polarity(phi.var_count + 1, 0);
  for (const auto& cl : phi.clauses) {
    if (cl.size() < 2) return false;
    std::set<int> seen;
    for (int lit : cl) {
      if (seen.contains(lit) || seen.contains(-lit)) return false;
      seen.insert(lit);
      polarity[std::abs(lit)] |= lit > 0 ? 1 : 2;
    }
  }
  return std::none_of(polarity.begin(), polarity.end(), [](int p) { return p == 1 || p == 2; });
}

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool header = false;
  int declared = 0;
  CnfFormula phi;
  std::vector<int> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first == "c" || first[0] == 'c' || first[0] == '%') continue;
    if (first == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> phi.var_count >> declared) || fmt != "cnf" || phi.var_count < 0 || declared < 0)
        throw ParseError("malformed problem line", line_no);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before the problem line", line_no);
    std::istringstream all(line);
    std::string tok;
    while (all >> tok) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) {
        phi.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::abs(lit) > phi.var_count) throw ParseError("literal " + tok + " exceeds the variable count", line_no);
      current.push_back(lit);
    }
  }
  if (!header) throw ParseError("missing problem line", 0);
  if (!current.empty()) phi.clauses.push_back(std::move(current));
  if (static_cast<int>(phi.clauses.size()) != declared)
    throw ParseError("declared " + std::to_string(declared) + " clauses, found " + std::to_string(phi.clauses.size()),
                     0);
  return phi;
}

std::string emit_dimacs(const CnfFormula& phi) {
  std::string out = "p cnf " + std::to_string(phi.var_count) + " " + std::to_string(phi.clauses.size()) + "\n";
  for (const auto& cl : phi.clauses) {
    for (int lit : cl) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

std::vector<std::string> GadgetOutput::describe() const {
  std::vector<std::string> out;
  if (sat) {
    for (std::size_t c = 0; c < sat->clause_cycle.size(); ++c) {
      std::string s = "clause " + std::to_string(c + 1) + " cycle:";
      for (Vertex v : sat->clause_cycle[c]) s += " " + std::to_string(v);
      out.push_back(std::move(s));
    }
    for (std::size_t x = 0; x < sat->v_of_var.size(); ++x)
      if (sat->v_of_var[x] >= 0)
        out.push_back("variable " + std::to_string(x + 1) + " -> vertex " + std::to_string(sat->v_of_var[x]));
    std::string m = "middle:";
    for (Vertex v : sat->middle) m += " " + std::to_string(v);
    out.push_back(std::move(m));
  }
  if (hamilton) {
    const auto& h = *hamilton;
    out.push_back("removed edge " + std::to_string(h.removed.first) + "-" + std::to_string(h.removed.second));
    out.push_back("pendant v1 = " + std::to_string(h.v1) + ", v2 = " + std::to_string(h.v2));
    out.push_back("e1 = " + std::to_string(h.e1) + ", e2 = " + std::to_string(h.e2));
    for (std::size_t i = 0; i < h.edge_of.size(); ++i)
      out.push_back("vertex " + std::to_string(i) + " = edge " + std::to_string(h.edge_of[i].first) + "-" +
                    std::to_string(h.edge_of[i].second));
  }
  return out;
}

GadgetOutput sat_to_lsac(const CnfFormula& phi) {
  if (!is_normalized(phi)) throw ContractViolation("formula must be normalized before building the gadget");
  SatProvenance prov;
  std::vector<Edge> edges;
  std::vector<ColourSet> lists;
  auto add_vertex = [&](ColourSet l) {
    lists.push_back(l);
    return static_cast<Vertex>(lists.size() - 1);
  };
  const ColourSet odd = colour_bit(1) | colour_bit(3);
  for (const auto& cl : phi.clauses) {
    VertexSet cycle;
    std::vector<Vertex> lits;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      lits.push_back(add_vertex(odd));
      cycle.push_back(lits.back());
      cycle.push_back(add_vertex(colour_bit(2)));
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    prov.clause_cycle.push_back(std::move(cycle));
    prov.literal_vertex.push_back(std::move(lits));
  }
  prov.v_of_var.assign(phi.var_count, -1);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c)
    for (std::size_t i = 0; i < phi.clauses[c].size(); ++i) {
      const int lit = phi.clauses[c][i];
      if (lit > 0 && prov.v_of_var[lit - 1] < 0) prov.v_of_var[lit - 1] = prov.literal_vertex[c][i];
    }
  for (std::size_t c = 0; c < phi.clauses.size(); ++c)
    for (std::size_t i = 0; i < phi.clauses[c].size(); ++i) {
      const int lit = phi.clauses[c][i];
      const Vertex w = prov.literal_vertex[c][i];
      const Vertex vx = prov.v_of_var[std::abs(lit) - 1];
      if (lit < 0) {
        edges.emplace_back(w, vx);
      } else if (w != vx) {
        const Vertex m = add_vertex(odd);
        prov.middle.push_back(m);
        edges.emplace_back(w, m);
        edges.emplace_back(m, vx);
      }
    }
  GadgetOutput out;
  out.graph = Graph(static_cast<int>(lists.size()), edges);
  out.lists = std::move(lists);
  out.sat = std::move(prov);
  return out;
}

GadgetOutput hamilton_gadget(const Graph& g, Edge e) {
  const int n = g.order();
  auto [u1, u2] = e;
  if (u1 < 0 || u2 < 0 || u1 >= n || u2 >= n || !g.adjacent(u1, u2))
    throw ContractViolation("hamilton_gadget: the chosen pair is not an edge");
  auto key = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  std::vector<Edge> edges;
  for (const Edge& f : g.edges())
    if (f != key(u1, u2)) edges.push_back(f);
  edges.emplace_back(u1, n);
  edges.emplace_back(u2, n + 1);
  const Graph mid(n + 2, edges);
  LineGraph lg = line_graph(mid);
  HamiltonProvenance h;
  h.removed = e;
  h.v1 = n;
  h.v2 = n + 1;
  for (std::size_t i = 0; i < lg.edge_of.size(); ++i) {
    if (lg.edge_of[i] == key(u1, n)) h.e1 = static_cast<Vertex>(i);
    if (lg.edge_of[i] == key(u2, n + 1)) h.e2 = static_cast<Vertex>(i);
  }
  h.edge_of = std::move(lg.edge_of);
  bool cubic = n > 0;
  for (int v = 0; v < n; ++v) cubic = cubic && g.degree(v) == 3;
  if (cubic)
    for (int v = 0; v < lg.graph.order(); ++v) {
      const int want = (v == h.e1 || v == h.e2) ? 2 : 4;
      if (lg.graph.degree(v) != want)
        throw InvariantBreach("line gadget degree census failed at vertex " + std::to_string(v), {v});
    }
  GadgetOutput out;
  out.graph = std::move(lg.graph);
  out.hamilton = std::move(h);
  return out;
}

Graph subdivision_chain(const Graph& g, int rounds) {
  if (rounds < 0) throw ContractViolation("rounds must be non-negative");
  Graph out = g;
  for (int r = 0; r < rounds; ++r) out = subdivide_all(out);
  return out;
}

}  // namespace nearbip
