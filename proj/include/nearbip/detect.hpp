#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nearbip/graph.hpp"

namespace nearbip {

/// Induced path on `r` vertices (consecutive vertices adjacent, all other
/// pairs non-adjacent), or nullopt. Throws ContractViolation if r < 1.
std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int r);

inline bool is_p5_free(const Graph& g) { return !find_induced_path(g, 5).has_value(); }

/// Centre first, then three pairwise non-adjacent neighbours.
std::optional<std::array<Vertex, 4>> find_induced_claw(const Graph& g);

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g);
inline bool contains_k4(const Graph& g) { return find_k4(g).has_value(); }

using Cycle4 = std::array<Vertex, 4>;

/// Every induced C4 exactly once, in canonical form: the lexicographically
/// least of its 8 rotations/reflections (so c[0] is the minimum vertex and
/// c[1] < c[3]). Output is sorted.
std::vector<Cycle4> enumerate_induced_c4(const Graph& g);

/// 2-colouring of G[vertices] by BFS from the lowest-index vertex of each
/// component, which is placed on the left. nullopt if an odd cycle exists.
std::optional<Bipartition> bipartition(const Graph& g, const VertexSet& vertices);
std::optional<Bipartition> bipartition(const Graph& g);

/// An odd cycle of G[vertices] as a vertex sequence, or nullopt if bipartite.
std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g, const VertexSet& vertices);

/// Components of G[vertices], each sorted, ordered by least vertex.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& vertices);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

bool is_forest(const Graph& g, const VertexSet& vertices);
bool is_forest(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& vertices);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Smallest dominating set of size <= 3 inducing a clique or a P3, searched by
/// size then lexicographically. Throws ContractViolation if g is disconnected.
std::optional<VertexSet> dominating_clique_or_p3(const Graph& g);

/// G - S as an induced subgraph on the complement of `removed`.
InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed);

}  // namespace nearbip
