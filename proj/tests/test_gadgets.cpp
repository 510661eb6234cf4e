#include <doctest.h>

#include "nearbip/detect.hpp"
#include "nearbip/gadgets.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/transform.hpp"
#include "support.hpp"

using namespace nearbip;

namespace {

bool gadget_colourable(const GadgetOutput& out) {
  return oracle::brute_lsac(out.graph, *out.lists).has_value();
}

bool near_bipartite_by_oracle(const Graph& g) { return oracle::brute_min_ifvs(g).has_value(); }

}  // namespace

TEST_CASE("normalization") {
  // unit x forces x; the clause (-x, y) then forces y
  const CnfFormula units{2, {{1}, {-1, 2}}};
  CHECK(normalize(units).clauses.empty());
  CHECK_THROWS_AS(normalize(CnfFormula{1, {{1}, {-1}}}), NormalizationError);
  const CnfFormula both{2, {{1, 2}, {-1, -2}}};
  CHECK(is_normalized(both));
  CHECK(normalize(both).clauses == both.clauses);
  CHECK_FALSE(is_normalized(CnfFormula{2, {{1, 2}, {1, -2}}}));
  const CnfFormula taut{2, {{1, -1}, {2, 2, -1}, {-2, 1}}};
  const CnfFormula t = normalize(taut);
  CHECK(is_normalized(t));
  CHECK(oracle::brute_sat(2, t.clauses) == oracle::brute_sat(2, taut.clauses));
}

TEST_CASE("normalization preserves satisfiability") {
  Rng rng(3);
  for (int it = 0; it < 300; ++it) {
    CnfFormula phi{rng.between(1, 5), {}};
    const int m = rng.between(1, 6);
    for (int i = 0; i < m; ++i) {
      std::vector<int> cl;
      for (int j = rng.between(1, 3); j > 0; --j) {
        const int v = rng.between(1, phi.var_count);
        cl.push_back(rng.chance(0.5) ? v : -v);
      }
      phi.clauses.push_back(cl);
    }
    const bool sat = oracle::brute_sat(phi.var_count, phi.clauses);
    try {
      const CnfFormula n = normalize(phi);
      CHECK(is_normalized(n));
      CHECK(oracle::brute_sat(n.var_count, n.clauses) == sat);
    } catch (const NormalizationError&) {
      CHECK_FALSE(sat);
    }
  }
}

TEST_CASE("DIMACS round trip") {
  const CnfFormula phi{3, {{1, -2}, {2, 3, -1}}};
  const CnfFormula back = parse_dimacs(emit_dimacs(phi));
  CHECK(back.var_count == 3);
  CHECK(back.clauses == phi.clauses);
  CHECK(parse_dimacs("c hello\np cnf 2 1\n1 -2 0\n").clauses == std::vector<std::vector<int>>{{1, -2}});
}

TEST_CASE("SAT gadget census on the four-clause example") {
  const CnfFormula phi{5, {{-1, 2, 3}, {1, -3, 4}, {1, -4, -5}, {-2, 3, 5}}};
  REQUIRE(is_normalized(phi));
  const GadgetOutput out = sat_to_lsac(phi);
  REQUIRE(out.sat);
  CHECK(out.sat->clause_cycle.size() == 4);
  for (const auto& cyc : out.sat->clause_cycle) CHECK(cyc.size() == 6);
  CHECK(out.sat->middle.size() == 2);
  CHECK(out.graph.order() == 26);
  CHECK(out.graph.edge_count() == 33);
  for (std::size_t c = 0; c < phi.clauses.size(); ++c)
    for (std::size_t i = 0; i < phi.clauses[c].size(); ++i)
      CHECK((*out.lists)[out.sat->literal_vertex[c][i]] == (colour_bit(1) | colour_bit(3)));
  CHECK_FALSE(out.describe().empty());
  CHECK(gadget_colourable(out) == oracle::brute_sat(5, phi.clauses));
}

TEST_CASE("SAT gadget on two small formulas") {
  const CnfFormula yes{2, {{1, 2}, {-1, -2}}};
  CHECK(gadget_colourable(sat_to_lsac(yes)));
  const CnfFormula no{2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}}};
  REQUIRE(is_normalized(no));
  CHECK_FALSE(gadget_colourable(sat_to_lsac(no)));
  CHECK_THROWS_AS(sat_to_lsac(CnfFormula{1, {{1}}}), ContractViolation);
}

TEST_CASE("Hamilton gadget on the cube") {
  const Graph q3 = cube_graph();
  for (const Edge& e : q3.edges()) {
    const GadgetOutput out = hamilton_gadget(q3, e);
    REQUIRE(out.hamilton);
    const auto& h = *out.hamilton;
    CHECK(out.graph.order() == 13);
    CHECK(out.graph.degree(h.e1) == 2);
    CHECK(out.graph.degree(h.e2) == 2);
    CHECK_FALSE(find_induced_claw(out.graph));
    CHECK(near_bipartite_by_oracle(out.graph) == oracle::brute_hamilton_through_edge(q3, e));
  }
}

TEST_CASE("Hamilton gadget on non-cubic input") {
  const GadgetOutput out = hamilton_gadget(cycle_graph(4), {0, 1});
  CHECK(out.graph.order() == 5);
  CHECK_THROWS_AS(hamilton_gadget(cycle_graph(4), {0, 2}), ContractViolation);
}

TEST_CASE("subdivision chains") {
  const Graph k4 = complete_graph(4);
  CHECK(subdivision_chain(k4, 0) == k4);
  const Graph once = subdivision_chain(k4, 1);
  CHECK(girth(once) == 6);
  CHECK(subdivision_chain(k4, 2).order() == 4 + 6 + 12);
  CHECK(oracle::brute_min_fvs(once).size == oracle::brute_min_fvs(k4).size);
}
