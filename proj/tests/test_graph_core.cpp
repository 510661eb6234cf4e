#include <doctest.h>

#include <algorithm>
#include <array>
#include <functional>

#include "nearbip/detect.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/graph_io.hpp"
#include "nearbip/transform.hpp"

using namespace nearbip;

namespace {

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] == p[b] || g.adjacent(p[a], p[b]) != (b == a + 1)) return false;
  return true;
}

// Counts induced C4s over all 4-subsets and their three possible cycle orders.
int brute_c4_count(const Graph& g) {
  const int n = g.order();
  int count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int edges = 0;
          const std::array<int, 4> q{a, b, c, d};
          std::array<int, 4> deg{};
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges == 4 && std::all_of(deg.begin(), deg.end(), [](int x) { return x == 2; })) ++count;
        }
  return count;
}

bool brute_has_p5(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> p;
  std::function<bool()> rec = [&]() {
    if (p.size() == 5) return is_induced_path(g, p);
    for (int v = 0; v < n; ++v) {
      if (std::find(p.begin(), p.end(), v) != p.end()) continue;
      p.push_back(v);
      if (is_induced_path(g, p) && rec()) return true;
      p.pop_back();
    }
    return false;
  };
  return rec();
}

}  // namespace

TEST_CASE("edge-list parsing") {
  const Graph g = parse_edgelist("2 1\n0 1");
  CHECK(g.order() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}});
  CHECK(parse_edgelist("4 4\n0 1\n1 2\n2 3\n3 0") == cycle_graph(4));
  CHECK(parse_edgelist("# comment\n3 2\n\n0 1\n# inner\n1 2\n") == path_graph(3));
  CHECK_THROWS_AS(parse_edgelist("3 1\n0 3"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3 1\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\nx y"), ParseError);
  try {
    parse_edgelist("3 1\n0 3");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("edge-list round trip") {
  const Graph g = random_graph(9, 0.4, 11);
  CHECK(parse_edgelist(emit_edgelist(g)) == g);
}

TEST_CASE("graph6 decoding and encoding") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
  CHECK(emit_graph6(Graph(1)) == "@");
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(8, 0.5, seed);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  const Graph big = random_graph(70, 0.1, 3);
  CHECK(parse_graph6(emit_graph6(big)) == big);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
}

TEST_CASE("induced paths") {
  CHECK_FALSE(find_induced_path(cycle_graph(4), 5));
  const auto p = find_induced_path(path_graph(5), 5);
  REQUIRE(p);
  CHECK(is_induced_path(path_graph(5), *p));
  const Graph pet = petersen_graph();
  const auto q = find_induced_path(pet, 5);
  REQUIRE(q);
  CHECK(is_induced_path(pet, *q));
  CHECK(brute_has_p5(pet));
  CHECK_THROWS_AS(find_induced_path(pet, 0), ContractViolation);
}

TEST_CASE("P5 detection agrees with exhaustive search") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = random_graph(8, 0.35, seed);
    CHECK(is_p5_free(g) == !brute_has_p5(g));
  }
}

TEST_CASE("claw detection") {
  const auto claw = find_induced_claw(star_graph(3));
  REQUIRE(claw);
  auto sorted = *claw;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::array<Vertex, 4>{0, 1, 2, 3});
  CHECK((*claw)[0] == 0);
  CHECK_FALSE(find_induced_claw(line_graph(complete_graph(4)).graph));
  CHECK_FALSE(find_induced_claw(cycle_graph(6)));
}

TEST_CASE("K4 detection") {
  CHECK(contains_k4(complete_graph(4)));
  CHECK_FALSE(contains_k4(complete_bipartite(3, 4)));
  CHECK_FALSE(contains_k4(petersen_graph()));
}

TEST_CASE("induced C4 enumeration") {
  const auto one = enumerate_induced_c4(cycle_graph(4));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Cycle4{0, 1, 2, 3});
  CHECK(enumerate_induced_c4(complete_graph(4)).empty());
  const Graph rook = rook_graph(3);
  CHECK(static_cast<int>(enumerate_induced_c4(rook).size()) == brute_c4_count(rook));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(9, 0.45, seed);
    const auto c4s = enumerate_induced_c4(g);
    CHECK(static_cast<int>(c4s.size()) == brute_c4_count(g));
    for (const auto& c : c4s) {
      CHECK(c[0] == *std::min_element(c.begin(), c.end()));
      CHECK(c[1] < c[3]);
    }
    CHECK(std::is_sorted(c4s.begin(), c4s.end()));
  }
}

TEST_CASE("bipartition") {
  const auto b = bipartition(cycle_graph(4));
  REQUIRE(b);
  CHECK(b->left == VertexSet{0, 2});
  CHECK(b->right == VertexSet{1, 3});
  CHECK_FALSE(bipartition(cycle_graph(5)));
  CHECK(bipartition(star_graph(4)));
  const auto odd = find_odd_cycle(cycle_graph(5), {0, 1, 2, 3, 4});
  REQUIRE(odd);
  CHECK(odd->size() % 2 == 1);
}

TEST_CASE("forest check") {
  CHECK(is_forest(path_graph(5)));
  CHECK_FALSE(is_forest(complete_graph(3)));
  CHECK_FALSE(is_forest(complete_graph(4), {0, 1, 2}));
  CHECK(is_forest(complete_graph(4), {0, 1}));
}

TEST_CASE("line graphs") {
  CHECK(line_graph(path_graph(4)).graph == path_graph(3));
  CHECK(line_graph(complete_graph(3)).graph == complete_graph(3));
  CHECK(line_graph(star_graph(3)).graph == complete_graph(3));
  const auto l = line_graph(cube_graph());
  CHECK(l.graph.order() == 12);
  CHECK(l.edge_of.size() == 12);
}

TEST_CASE("subdivision") {
  const Graph s = subdivide_edge(complete_graph(3), 0, 1);
  CHECK(s.order() == 4);
  CHECK(s.edge_count() == 4);
  CHECK(girth(s) == 4);
  CHECK_THROWS_AS(subdivide_edge(path_graph(3), 0, 2), ContractViolation);
  const Graph c6 = subdivide_all(complete_graph(3));
  CHECK(c6.order() == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(girth(c6) == 6);
  const Graph k4s = subdivide_all(complete_graph(4));
  CHECK(k4s.order() == 10);
  CHECK(k4s.edge_count() == 12);
  CHECK(girth(k4s) == 6);
}

TEST_CASE("dominating clique or P3") {
  CHECK(dominating_clique_or_p3(star_graph(4)) == VertexSet{0});
  const auto p = dominating_clique_or_p3(path_graph(5));
  REQUIRE(p);
  CHECK(p->size() == 3);
  CHECK_THROWS_AS(dominating_clique_or_p3(Graph(2)), ContractViolation);
  // Edges and P3s of C7 dominate at most five vertices.
  CHECK_FALSE(dominating_clique_or_p3(cycle_graph(7)));
}

TEST_CASE("generators") {
  CHECK(random_graph(5, 1.0, 9) == complete_graph(5));
  CHECK(random_graph(7, 0.3, 5) == random_graph(7, 0.3, 5));
  CHECK(is_p5_free(random_p5free_graph(10, 1)));
  Rng rng(4);
  for (int i = 0; i < 20; ++i) CHECK_FALSE(find_induced_path(random_cograph(10, rng, 0.4), 4));
  for (auto f : {P5FreeFamily::Cograph, P5FreeFamily::Split, P5FreeFamily::Multipartite, P5FreeFamily::Growth,
                 P5FreeFamily::PerturbedCograph, P5FreeFamily::Rejection}) {
    CHECK(is_p5_free(random_p5free_graph(9, 3, f)));
    CHECK(parse_family(family_name(f)) == f);
  }
  CHECK(named_graph("q3") == cube_graph());
  CHECK(named_graph("cycle5") == cycle_graph(5));
  CHECK_THROWS_AS(named_graph("nonsense"), std::invalid_argument);
}
