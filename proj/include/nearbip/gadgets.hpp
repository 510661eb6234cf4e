#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearbip/colouring.hpp"
#include "nearbip/graph.hpp"

namespace nearbip {

/// CNF over variables 1..var_count; literal +v or -v.
struct CnfFormula {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;
};

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Equisatisfiable formula in which every clause has at least two distinct
/// literals and every occurring variable appears in both polarities.
/// Removes duplicate literals and tautologies, then applies unit propagation
/// and pure-literal elimination to a fixed point. Throws NormalizationError
/// when propagation derives the empty clause.
CnfFormula normalize(const CnfFormula& phi);

/// True when normalize would leave phi unchanged.
bool is_normalized(const CnfFormula& phi);

/// DIMACS "p cnf V C" with 0-terminated clauses; 'c' lines are comments.
CnfFormula parse_dimacs(std::string_view text);
std::string emit_dimacs(const CnfFormula& phi);

struct SatProvenance {
  /// Cycle of each clause, starting at its first literal and alternating
  /// literal vertex, {2} vertex.
  std::vector<VertexSet> clause_cycle;
  /// literal_vertex[c][i] represents literal i of clause c.
  std::vector<std::vector<Vertex>> literal_vertex;
  /// v_of_var[x - 1] is the chosen positive occurrence of x; -1 if x does
  /// not occur.
  std::vector<Vertex> v_of_var;
  VertexSet middle;
};

struct HamiltonProvenance {
  Edge removed{};  // the edge u1u2 of the input
  Vertex v1 = 0;   // pendant neighbour of u1
  Vertex v2 = 0;   // pendant neighbour of u2
  Vertex e1 = 0;   // line-graph vertex for u1v1
  Vertex e2 = 0;   // line-graph vertex for u2v2
  /// Edge of the intermediate graph represented by each output vertex.
  std::vector<Edge> edge_of;
};

struct GadgetOutput {
  Graph graph;
  std::optional<ListAssignment> lists;
  std::optional<SatProvenance> sat;
  std::optional<HamiltonProvenance> hamilton;

  /// Role of every vertex, one line each, for emitting as comments.
  std::vector<std::string> describe() const;
};

/// Clause cycles with alternating {1,3}/{2} lists, one v_x per variable
/// (its first positive occurrence in input order), middle vertices joining
/// v_x to its other positive occurrences, and edges from v_x to negative
/// occurrences. phi must be normalized (ContractViolation otherwise).
/// The result has a list semi-acyclic 3-colouring iff phi is satisfiable.
GadgetOutput sat_to_lsac(const CnfFormula& phi);

/// Line graph of g - u1u2 plus pendant edges u1v1 and u2v2. For cubic g the
/// result is near-bipartite iff g has a Hamilton cycle through u1u2, and
/// e1, e2 are its only vertices of degree 2 (others have degree 4); the
/// census is checked for cubic inputs. Throws ContractViolation if e is not
/// an edge.
GadgetOutput hamilton_gadget(const Graph& g, Edge e);

/// Subdivides every edge `rounds` times over.
Graph subdivision_chain(const Graph& g, int rounds);

}  // namespace nearbip
