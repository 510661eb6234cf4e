#include <doctest.h>

#include "nearbip/generators.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/transform.hpp"

using namespace nearbip;
using namespace nearbip::oracle;

namespace {

constexpr ColourSet set_of(std::initializer_list<int> cs) {
  ColourSet s = 0;
  for (int c : cs) s |= colour_bit(c);
  return s;
}

}  // namespace

TEST_CASE("minimum independent feedback vertex sets") {
  CHECK_FALSE(brute_min_ifvs(complete_graph(4)));
  const auto c4 = brute_min_ifvs(cycle_graph(4));
  REQUIRE(c4);
  CHECK(c4->size == 1);
  CHECK(c4->set == VertexSet{0});
  const auto tree = brute_min_ifvs(star_graph(4));
  REQUIRE(tree);
  CHECK(tree->size == 0);
  CHECK(tree->set.empty());
  CHECK(brute_max_ifvs(path_graph(3))->set == VertexSet{0, 2});
  CHECK(brute_ifvs_of_size(cycle_graph(4), 2)->set == VertexSet{0, 2});
  CHECK_FALSE(brute_ifvs_of_size(cycle_graph(4), 3));
}

TEST_CASE("odd cycle transversals and feedback vertex sets") {
  CHECK(brute_min_ioct(cycle_graph(5))->size == 1);
  CHECK(brute_min_ioct(cycle_graph(6))->size == 0);
  CHECK(brute_min_fvs(complete_graph(4)).size == 2);
  CHECK(brute_min_fvs(subdivide_all(complete_graph(4))).size == 2);
  CHECK(brute_all_min_fvs(cycle_graph(5)).size() == 5);
}

TEST_CASE("list colourings") {
  CHECK_FALSE(brute_lsac(cycle_graph(4), ListAssignment(4, set_of({2, 3}))));
  CHECK(brute_lsac(cycle_graph(4), ListAssignment(4, set_of({2, 3})), ColouringMode::Proper));
  CHECK_FALSE(brute_lsac(path_graph(2), ListAssignment(2, set_of({1}))));
  const auto p3 = brute_lsac(path_graph(3), full_lists(3));
  REQUIRE(p3);
  CHECK(*p3 == Coloring{1, 2, 1});
  const auto all = brute_all_lsac(path_graph(2), full_lists(2));
  CHECK(all.size() == 6);
  CHECK(all.front() == Coloring{1, 2});
}

TEST_CASE("trouble-free colourings") {
  const TroublesomeInstance empty{Graph(2), {0, 1}, {}};
  const auto e = brute_trouble_free(empty);
  REQUIRE(e);
  CHECK(e->first == 0);
  CHECK(e->second == Coloring{2, 2});
  const TroublesomeInstance c4{cycle_graph(4), {1, 3}, {0, 2}};
  const auto c = brute_trouble_free(c4);
  REQUIRE(c);
  CHECK(c->first == 1);
  CHECK((c->second[0] == 1) != (c->second[2] == 1));
  const TroublesomeInstance edge{path_graph(2), {}, {0, 1}};
  CHECK(brute_trouble_free(edge)->first == 1);
}

TEST_CASE("Hamilton cycles through an edge") {
  const Graph c5 = cycle_graph(5);
  for (const Edge& e : c5.edges()) CHECK(brute_hamilton_through_edge(c5, e));
  CHECK_FALSE(brute_hamilton_through_edge(path_graph(4), {1, 2}));
  const Graph q3 = cube_graph();
  for (const Edge& e : q3.edges()) CHECK(brute_hamilton_through_edge(q3, e));
  CHECK_FALSE(brute_hamilton_through_edge(petersen_graph(), {0, 1}));
  CHECK_THROWS_AS(brute_hamilton_through_edge(c5, {0, 2}), ContractViolation);
}

TEST_CASE("satisfiability") {
  CHECK(brute_sat(1, {{1}}));
  CHECK_FALSE(brute_sat(1, {{1}, {-1}}));
  CHECK(brute_sat(3, {}));
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(brute_min_ifvs(Graph(kMaxSubsetOrder + 1)), GuardExceeded);
  CHECK_THROWS_AS(brute_hamilton_through_edge(cycle_graph(kMaxHamiltonOrder + 1), {0, 1}), GuardExceeded);
  CHECK_THROWS_AS(brute_lsac(Graph(20), full_lists(20)), GuardExceeded);
}
