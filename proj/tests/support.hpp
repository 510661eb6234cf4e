#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nearbip/colouring.hpp"
#include "nearbip/gadgets.hpp"
#include "nearbip/generators.hpp"
#include "nearbip/graph.hpp"
#include "nearbip/trouble_free.hpp"

namespace nearbip::testing {

struct Named {
  std::string name;
  Graph graph;
};

/// Forests, cycles C3..C8, complete multipartite, split graphs and cographs.
std::vector<Named> fixed_corpus();

/// `count` seeded P5-free graphs with orders in [min_n, max_n].
std::vector<Named> random_corpus(int count, int min_n, int max_n, std::uint64_t seed);

/// P5-free and near-bipartite by construction: each new vertex gets a random
/// neighbourhood of at most `max_degree` earlier vertices, kept only if the
/// graph stays P5-free and near-bipartite.
Graph near_bipartite_growth(int n, std::uint64_t seed, int max_degree);

/// The order-40 performance corpus.
std::vector<Named> order40_corpus();

/// Each list a non-empty subset of {1,2,3}, biased towards larger lists.
ListAssignment random_lists(int n, Rng& rng);

/// Random P5-free graph split into an independent l2 and a bipartite l13
/// with at most max_l13 vertices; nullopt if the draw did not fit.
std::optional<TroublesomeInstance> random_troublesome(std::uint64_t seed, int max_n, int max_l13);

/// Aux graph in the shape built from an instance: red edges bipartite, blue
/// edges between red non-neighbours, every vertex free and alive.
AuxGraph random_aux_h(Rng& rng, int n);

/// Aux graph in contracted shape: red edges a matching, blue edges a
/// disjoint union of cliques.
AuxGraph random_aux_hstar(Rng& rng, int n);

/// Every colour vector in {1,3}^n keeping fixed colours, with red edges
/// bichromatic and blue edges never 3 and 3 among alive vertices.
std::vector<std::vector<int>> aux_colourings(const AuxGraph& a);

/// A random formula with clauses of 2..max_width literals passed through
/// normalize; nullopt when normalization fails or leaves nothing.
std::optional<CnfFormula> random_normalized_formula(Rng& rng, int max_vars, int max_clauses, int max_width = 3);

/// Proper, list-respecting, and semi-acyclic in that mode.
bool valid_lsac(const Graph& g, const ListAssignment& lists, const Coloring& c, ColouringMode mode);

}  // namespace nearbip::testing
