#pragma once

#include <vector>

#include "nearbip/graph.hpp"

namespace nearbip {

struct LineGraph {
  Graph graph;
  /// Edge of the source graph that line-graph vertex i stands for.
  std::vector<Edge> edge_of;
};

/// Vertices are the edges of g (in g.edges() order); adjacent iff they share an endpoint.
LineGraph line_graph(const Graph& g);

/// Removes uv and adds vertex n adjacent to u and v. Throws ContractViolation
/// if uv is not an edge.
Graph subdivide_edge(const Graph& g, Vertex u, Vertex v);

/// Subdivides every edge once; edge k of g.edges() gets new vertex n + k.
Graph subdivide_all(const Graph& g);

/// Vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& a, const Graph& b);

}  // namespace nearbip
