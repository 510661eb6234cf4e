#include <doctest.h>

#include "nearbip/detect.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/ifvs.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/transform.hpp"
#include "support.hpp"

using namespace nearbip;

TEST_CASE("complete graphs on four vertices are not near-bipartite") {
  const auto r = is_near_bipartite(complete_graph(4));
  CHECK_FALSE(r.verdict);
  CHECK_FALSE(r.witness);
  CHECK_FALSE(min_ifvs(complete_graph(5)).verdict);
}

TEST_CASE("bipartite graphs are near-bipartite") {
  for (const Graph& g : {cycle_graph(4), complete_bipartite(3, 3), path_graph(4)}) {
    const auto r = is_near_bipartite(g);
    CHECK(r.verdict);
    REQUIRE(r.witness);
    CHECK(is_ifvs(g, *r.witness));
    CHECK(*min_ioct(g).size == 0);
  }
}

TEST_CASE("small exact answers") {
  const auto forest = min_ifvs(disjoint_union(path_graph(4), star_graph(3)));
  CHECK(forest.verdict);
  CHECK(*forest.size == 0);
  CHECK(forest.witness->empty());

  const auto c4 = min_ifvs(cycle_graph(4));
  CHECK(*c4.size == 1);
  CHECK(is_ifvs(cycle_graph(4), *c4.witness));

  CHECK_FALSE(ifvs_decision(cycle_graph(4), 0).verdict);
  CHECK(ifvs_decision(cycle_graph(4), 1).verdict);

  const auto p3 = max_ifvs(path_graph(3));
  CHECK(*p3.size == 2);
  CHECK(*p3.witness == VertexSet{0, 2});
  CHECK(*p3.size == oracle::brute_max_ifvs(path_graph(3))->size);

  const auto c5 = min_ioct(cycle_graph(5));
  CHECK(*c5.size == 1);
  CHECK(is_ioct(cycle_graph(5), *c5.witness));
  CHECK_FALSE(ioct_decision(cycle_graph(5), 0).verdict);
  CHECK(ioct_decision(cycle_graph(5), 1).verdict);
  CHECK_FALSE(min_ioct(complete_graph(4)).verdict);
}

TEST_CASE("exact size") {
  const Graph g = complete_bipartite(2, 3);
  for (long long k = 0; k <= 6; ++k) {
    const auto r = ifvs_exact_size(g, k);
    CHECK(r.verdict == oracle::brute_ifvs_of_size(g, static_cast<int>(k)).has_value());
    if (r.verdict) {
      CHECK(static_cast<long long>(r.witness->size()) == k);
      CHECK(is_ifvs(g, *r.witness));
    }
  }
  CHECK_FALSE(ifvs_exact_size(g, 40).verdict);
}

TEST_CASE("witness checks") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_ifvs(c4, {0}));
  CHECK_FALSE(is_ifvs(c4, {}));
  CHECK_FALSE(is_ifvs(c4, {0, 1}));
  CHECK(is_ioct(cycle_graph(5), {2}));
  CHECK_FALSE(is_ioct(complete_graph(4), {0}));
}

TEST_CASE("solvers agree with the oracle on random P5-free graphs") {
  for (const auto& [name, g] : testing::random_corpus(120, 3, 12, 31)) {
    CAPTURE(name);
    const auto lo = oracle::brute_min_ifvs(g);
    const auto a = min_ifvs(g);
    REQUIRE(a.verdict == lo.has_value());
    if (!lo) continue;
    CHECK(*a.size == lo->size);
    CHECK(is_ifvs(g, *a.witness));
    const auto b = max_ifvs(g);
    CHECK(*b.size == oracle::brute_max_ifvs(g)->size);
    const auto c = min_ioct(g);
    const auto co = oracle::brute_min_ioct(g);
    REQUIRE(c.verdict == co.has_value());
    if (co) CHECK(*c.size == co->size);
  }
}

TEST_CASE("parallel evaluation reports the same record") {
  for (const auto& [name, g] : testing::random_corpus(30, 8, 14, 5)) {
    CAPTURE(name);
    const auto seq = min_ifvs(g);
    const auto par = min_ifvs(g, {.parallel = true});
    CHECK(to_json(seq).dump() == to_json(par).dump());
  }
}

TEST_CASE("records") {
  const auto r = min_ifvs(cycle_graph(4));
  const auto j = to_json(r);
  CHECK(j["verdict"] == "yes");
  CHECK(j["size"] == 1);
  CHECK(j["witness"].is_array());
  CHECK(j["stats"].contains("nodes"));
  CHECK_FALSE(j["stats"].contains("wall_seconds"));
  CHECK(to_json(r, true)["stats"].contains("wall_seconds"));
  const auto no = to_json(is_near_bipartite(complete_graph(4)));
  CHECK(no["verdict"] == "no");
  CHECK(no["size"].is_null());
  CHECK(nlohmann::ordered_json::parse(j.dump()) == j);
}

TEST_CASE("checked mode refuses graphs with an induced P5") {
  CHECK_THROWS_AS(min_ifvs(path_graph(5)), NotP5Free);
  CHECK_THROWS_AS(min_ifvs(cycle_graph(6)), NotP5Free);
  const auto r = min_ifvs(path_graph(5), {.check_p5 = false});
  CHECK(r.verdict);
  CHECK(*r.size == 0);
}
