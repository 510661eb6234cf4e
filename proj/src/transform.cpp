#include "nearbip/transform.hpp"

#include <algorithm>

namespace nearbip {

LineGraph line_graph(const Graph& g) {
  auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<int>> incident(g.order());
  for (int k = 0; k < m; ++k) {
    incident[edges[k].first].push_back(k);
    incident[edges[k].second].push_back(k);
  }
  std::vector<Edge> adj;
  for (const auto& inc : incident)
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j) adj.emplace_back(inc[i], inc[j]);
  return {Graph(m, adj), std::move(edges)};
}

Graph subdivide_edge(const Graph& g, Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw ContractViolation("subdivide_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge");
  std::vector<Edge> edges;
  for (auto e : g.edges())
    if (!(e == Edge{std::min(u, v), std::max(u, v)})) edges.push_back(e);
  const Vertex w = g.order();
  edges.emplace_back(u, w);
  edges.emplace_back(w, v);
  return Graph(g.order() + 1, edges);
}

Graph subdivide_all(const Graph& g) {
  const auto old = g.edges();
  const int n = g.order();
  std::vector<Edge> edges;
  edges.reserve(2 * old.size());
  for (std::size_t k = 0; k < old.size(); ++k) {
    const Vertex w = n + static_cast<int>(k);
    edges.emplace_back(old[k].first, w);
    edges.emplace_back(w, old[k].second);
  }
  return Graph(n + static_cast<int>(old.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges();
  const int shift = a.order();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  auto edges = disjoint_union(a, b).edges();
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
  return Graph(a.order() + b.order(), edges);
}

}  // namespace nearbip
