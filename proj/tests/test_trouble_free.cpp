#include <doctest.h>

#include <algorithm>

#include "nearbip/detect.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/trouble_free.hpp"
#include "support.hpp"

using namespace nearbip;

namespace {

int count_edges(const AuxGraph& a, EdgeLabel l) {
  int m = 0;
  for (int u = 0; u < a.order(); ++u)
    for (int v = u + 1; v < a.order(); ++v)
      if (a.label[u][v] == l) ++m;
  return m;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] == p[b] || g.adjacent(p[a], p[b]) != (b == a + 1)) return false;
  return true;
}

AuxGraph singletons(int n) {
  AuxGraph a(n);
  for (int v = 0; v < n; ++v) {
    a.weight[v] = 1;
    a.members[v] = {v};
  }
  return a;
}

}  // namespace

TEST_CASE("instance validation") {
  CHECK_NOTHROW(validate({cycle_graph(4), {1, 3}, {0, 2}}));
  CHECK_THROWS_AS(validate({path_graph(2), {0, 1}, {}}), ContractViolation);
  CHECK_THROWS_AS(validate({complete_graph(3), {}, {0, 1, 2}}), ContractViolation);
  CHECK_THROWS_AS(validate({path_graph(3), {0}, {1}}), ContractViolation);
}

TEST_CASE("auxiliary graph H") {
  const AuxGraph c4 = build_h({cycle_graph(4), {1, 3}, {0, 2}});
  CHECK(c4.order() == 2);
  CHECK(count_edges(c4, EdgeLabel::Blue) == 1);
  CHECK(count_edges(c4, EdgeLabel::Red) == 0);

  const AuxGraph edge = build_h({path_graph(2), {}, {0, 1}});
  CHECK(count_edges(edge, EdgeLabel::Red) == 1);
  CHECK(edge.side[0] != edge.side[1]);

  // 0 and 2 share only the l2 vertex 1
  const AuxGraph lone = build_h({path_graph(3), {1}, {0, 2}});
  CHECK(lone.order() == 2);
  CHECK(count_edges(lone, EdgeLabel::Blue) == 0);
  CHECK(count_edges(lone, EdgeLabel::Red) == 0);
}

TEST_CASE("blue edge inside one side colours both ends 1") {
  AuxGraph a = singletons(3);
  a.set_edge(0, 1, EdgeLabel::Red);
  a.set_edge(1, 2, EdgeLabel::Red);
  a.set_edge(0, 2, EdgeLabel::Blue);
  assign_red_sides(a);
  REQUIRE(a.side[0] == a.side[2]);
  CHECK(apply_aux_rule(a, 1) == AuxOutcome::Changed);
  CHECK(a.colour[0] == 1);
  CHECK(a.colour[2] == 1);
  CHECK(reduce_h(a));
  CHECK(a.colour[1] == 3);
  CHECK(a.alive_vertices().empty());
  CHECK(a.ones_weight() == 2);
}

TEST_CASE("blue edge across sides is dropped") {
  AuxGraph a = singletons(2);
  a.set_edge(0, 1, EdgeLabel::Red);
  assign_red_sides(a);
  a.set_edge(0, 1, EdgeLabel::Blue);
  CHECK(apply_aux_rule(a, 2) == AuxOutcome::Changed);
  CHECK(a.label[0][1] == EdgeLabel::None);
  CHECK(a.colour == std::vector<int>{0, 0});
}

TEST_CASE("blue neighbour of both sides of a component gets colour 1") {
  AuxGraph a = singletons(3);
  a.set_edge(1, 2, EdgeLabel::Red);
  a.set_edge(0, 1, EdgeLabel::Blue);
  a.set_edge(0, 2, EdgeLabel::Blue);
  assign_red_sides(a);
  CHECK(apply_aux_rule(a, 3) == AuxOutcome::Changed);
  CHECK(a.colour[0] == 1);
}

TEST_CASE("rules 4 to 7") {
  AuxGraph a = singletons(3);
  a.set_edge(0, 1, EdgeLabel::Blue);
  a.set_edge(1, 2, EdgeLabel::Red);
  assign_red_sides(a);
  a.colour[0] = 3;
  CHECK(apply_aux_rule(a, 4) == AuxOutcome::Changed);
  CHECK(a.colour[1] == 1);
  CHECK(apply_aux_rule(a, 5) == AuxOutcome::Changed);
  CHECK(a.colour[2] == 3);
  CHECK(apply_aux_rule(a, 6) == AuxOutcome::Unchanged);
  CHECK(apply_aux_rule(a, 7) == AuxOutcome::Changed);
  CHECK(a.alive_vertices().empty());

  AuxGraph clash = singletons(2);
  clash.set_edge(0, 1, EdgeLabel::Blue);
  clash.colour = {3, 3};
  CHECK(apply_aux_rule(clash, 6) == AuxOutcome::No);
  CHECK_THROWS_AS(apply_aux_rule(clash, 9), ContractViolation);
}

TEST_CASE("two red edges between blue cliques pin the rest to 1") {
  // cliques {0,1,2} and {3,4}; red 0-3 and 1-4
  AuxGraph a = singletons(5);
  a.set_edge(0, 1, EdgeLabel::Blue);
  a.set_edge(0, 2, EdgeLabel::Blue);
  a.set_edge(1, 2, EdgeLabel::Blue);
  a.set_edge(3, 4, EdgeLabel::Blue);
  a.set_edge(0, 3, EdgeLabel::Red);
  a.set_edge(1, 4, EdgeLabel::Red);
  assign_red_sides(a);
  CHECK(apply_aux_rule(a, 8) == AuxOutcome::Changed);
  CHECK(a.colour[2] == 1);
  CHECK(a.colour[0] == 0);
}

TEST_CASE("contraction of red components") {
  AuxGraph h = singletons(4);
  h.set_edge(0, 1, EdgeLabel::Red);
  h.set_edge(1, 2, EdgeLabel::Red);
  h.set_edge(2, 3, EdgeLabel::Red);
  assign_red_sides(h);
  const AuxGraph hs = build_hstar(h);
  REQUIRE(hs.order() == 2);
  CHECK(hs.label[0][1] == EdgeLabel::Red);
  CHECK(hs.weight == std::vector<int>{2, 2});

  AuxGraph blue = singletons(2);
  blue.set_edge(0, 1, EdgeLabel::Blue);
  assign_red_sides(blue);
  const AuxGraph bs = build_hstar(blue);
  REQUIRE(bs.order() == 2);
  CHECK(bs.label[0][1] == EdgeLabel::Blue);
}

TEST_CASE("blue components are cliques on P5-free instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto inst = testing::random_troublesome(seed, 14, 12);
    if (!inst) continue;
    AuxGraph h = build_h(*inst);
    if (!reduce_h(h)) continue;
    AuxGraph hs = build_hstar(h);
    if (!reduce_hstar(hs)) continue;
    CHECK_FALSE(assert_blue_cliques(hs, *inst));
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("a blue path yields an induced P5 of the instance") {
  // u=0, v=1, w=2 in l13; p=3,4 join u and v; q=5,6 join v and w
  const Graph g(7, std::vector<Edge>{{0, 3}, {1, 3}, {0, 4}, {1, 4}, {1, 5}, {2, 5}, {1, 6}, {2, 6}});
  const TroublesomeInstance inst{g, {3, 4, 5, 6}, {0, 1, 2}};
  AuxGraph h = build_h(inst);
  REQUIRE(reduce_h(h));
  AuxGraph hs = build_hstar(h);
  const auto witness = assert_blue_cliques(hs, inst);
  REQUIRE(witness);
  REQUIRE(witness->size() == 5);
  CHECK(is_induced_path(g, *witness));
  CHECK_THROWS_AS(trouble_profile(inst), InvariantBreach);

  const TroublesomeInstance single{cycle_graph(4), {1, 3}, {0, 2}};
  AuxGraph s = build_hstar(build_h(single));
  CHECK_FALSE(assert_blue_cliques(s, single));
}

TEST_CASE("minimum weight of small contracted graphs") {
  AuxGraph red = singletons(2);
  red.weight = {3, 1};
  red.set_edge(0, 1, EdgeLabel::Red);
  assign_red_sides(red);
  const auto r = minimize(red);
  REQUIRE(r);
  CHECK(r->first == 1);
  CHECK(r->second[1] == 1);

  AuxGraph blue = singletons(2);
  blue.set_edge(0, 1, EdgeLabel::Blue);
  assign_red_sides(blue);
  const auto b = minimize(blue);
  REQUIRE(b);
  CHECK(b->first == 1);
  const auto options = enumerate_options(blue);
  REQUIRE(options.size() == 1);
  CHECK(options[0].options.size() == 2);
}

TEST_CASE("t without blue edges is the sum of lighter sides") {
  // l13 = P3 + K2 (red components with sides 2/1 and 1/1), l2 empty
  const Graph g(5, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
  const TroublesomeInstance inst{g, {}, {0, 1, 2, 3, 4}};
  const auto t = t_of(inst);
  REQUIRE(t.t);
  CHECK(*t.t == 2);
  CHECK(is_trouble_free(inst, t.witness));
}

TEST_CASE("t of special instances") {
  const TroublesomeInstance c4{cycle_graph(4), {1, 3}, {0, 2}};
  const auto t = t_of(c4);
  REQUIRE(t.t);
  CHECK(*t.t == 1);
  CHECK(*t_of(c4, ColouringMode::Proper).t == 0);

  const TroublesomeInstance empty{Graph(3), {0, 1, 2}, {}};
  const auto e = t_of(empty);
  REQUIRE(e.t);
  CHECK(*e.t == 0);
  CHECK(e.witness == Coloring{2, 2, 2});

  const Graph g(8, std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {0, 4}, {1, 4}, {0, 5}, {1, 5},
                                      {2, 6}, {3, 6}, {2, 7}, {3, 7}});
  CHECK_FALSE(t_of({g, {4, 5, 6, 7}, {0, 1, 2, 3}}).t);
}

TEST_CASE("profiles agree with exhaustive enumeration") {
  int checked = 0;
  for (std::uint64_t seed = 1000; seed < 1200; ++seed) {
    const auto inst = testing::random_troublesome(seed, 14, 12);
    if (!inst) continue;
    for (auto mode : {ColouringMode::SemiAcyclic, ColouringMode::Proper}) {
      const auto profile = trouble_profile(*inst, mode);
      auto counts = oracle::brute_trouble_free_counts(*inst, mode);
      const bool any = std::find(counts.begin(), counts.end(), true) != counts.end();
      REQUIRE(profile.feasible() == any);
      if (!any) continue;
      auto got = profile.attainable();
      got.resize(counts.size(), false);
      CHECK(got == counts);
      for (std::size_t k = 0; k < counts.size(); ++k)
        if (counts[k]) {
          const Coloring c = profile.realize(static_cast<long long>(k));
          CHECK(is_trouble_free(*inst, c, mode));
          CHECK(static_cast<std::size_t>(std::count(c.begin(), c.end(), 1)) == k);
        }
      CHECK_THROWS_AS(profile.realize(static_cast<long long>(counts.size()) + 1), std::out_of_range);
    }
    ++checked;
  }
  CHECK(checked > 50);
}
