#include <doctest.h>

#include "nearbip/generators.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/twosat.hpp"

using namespace nearbip;
using namespace nearbip::twosat;

namespace {

std::vector<std::vector<int>> as_dimacs(const Instance& inst) {
  std::vector<std::vector<int>> out;
  auto lit = [](Literal l) { return l.positive ? l.var + 1 : -(l.var + 1); };
  for (auto [a, b] : inst.clauses) out.push_back({lit(a), lit(b)});
  return out;
}

}  // namespace

TEST_CASE("unit clause forces its literal") {
  Instance inst{1, {}};
  inst.add(pos(0), pos(0));
  const auto a = solve(inst);
  REQUIRE(a);
  CHECK((*a)[0]);
}

TEST_CASE("all four combinations forbidden") {
  Instance inst{2, {}};
  inst.add(pos(0), pos(1));
  inst.add(neg(0), pos(1));
  inst.add(pos(0), neg(1));
  inst.add(neg(0), neg(1));
  CHECK_FALSE(solve(inst));
}

TEST_CASE("empty instance is satisfiable") {
  const auto a = solve(Instance{3, {}});
  REQUIRE(a);
  CHECK(a->size() == 3);
}

TEST_CASE("random 12-variable instances agree with enumeration") {
  Rng rng(12);
  for (int it = 0; it < 300; ++it) {
    Instance inst{12, {}};
    const int m = rng.between(1, 30);
    for (int i = 0; i < m; ++i)
      inst.add({rng.between(0, 11), rng.chance(0.5)}, {rng.between(0, 11), rng.chance(0.5)});
    const auto a = solve(inst);
    CHECK(a.has_value() == oracle::brute_sat(12, as_dimacs(inst)));
    if (a) CHECK(satisfies(inst, *a));
  }
}

TEST_CASE("solutions are deterministic") {
  Rng rng(5);
  Instance inst{8, {}};
  for (int i = 0; i < 10; ++i) inst.add({rng.between(0, 7), rng.chance(0.5)}, {rng.between(0, 7), rng.chance(0.5)});
  CHECK(solve(inst) == solve(inst));
}

TEST_CASE("DIMACS rendering") {
  Instance inst{2, {}};
  inst.add(pos(0), neg(1));
  const std::string d = to_dimacs(inst);
  CHECK(d.find("p cnf 2 1") != std::string::npos);
  CHECK(d.find("1 -2 0") != std::string::npos);
}
