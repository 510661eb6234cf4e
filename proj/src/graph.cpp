#include "nearbip/graph.hpp"

#include <algorithm>

namespace nearbip {

VertexSet normalized(VertexSet vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Graph::Graph(int n) : adj_(n), rows_(n, Bitset(n)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) continue;
    rows_[u].set(v);
    rows_[v].set(u);
    ++m_;
  }
  for (int v = 0; v < n; ++v) adj_[v] = rows_[v].to_vector();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Bitset Graph::all_vertices() const {
  Bitset b(order());
  for (int v = 0; v < order(); ++v) b.set(v);
  return b;
}

Bitset Graph::to_bits(std::span<const Vertex> vs) const {
  Bitset b(order());
  for (Vertex v : vs) b.set(v);
  return b;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> local(g.order(), -1);
  std::vector<Vertex> to_parent(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < to_parent.size(); ++i) local[to_parent[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    for (Vertex w : g.neighbours(to_parent[i]))
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
  return {Graph(static_cast<int>(to_parent.size()), edges), std::move(to_parent)};
}

}  // namespace nearbip
