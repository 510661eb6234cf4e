#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nearbip/bitset.hpp"

namespace nearbip {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet normalized(VertexSet vs);

/// Raised when an input violates a documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when an internal invariant of a solver is broken. On P5-free
/// inputs this signals a bug; on other inputs it may carry a witness.
class InvariantBreach : public std::logic_error {
 public:
  explicit InvariantBreach(const std::string& what, std::vector<Vertex> witness = {})
      : std::logic_error(what), witness_(std::move(witness)) {}
  const std::vector<Vertex>& witness() const noexcept { return witness_; }

 private:
  std::vector<Vertex> witness_;
};

/// Undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges collapse. Throws std::invalid_argument on self-loops
  /// or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
  const Bitset& neighbour_bits(Vertex v) const { return rows_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Bitset of all vertices, sized to this graph.
  Bitset all_vertices() const;
  Bitset to_bits(std::span<const Vertex> vs) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Bitset> rows_;
  std::size_t m_ = 0;
};

/// Subgraph induced by a vertex subset; `to_parent[i]` is the parent index
/// of local vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Bipartition {
  VertexSet left;
  VertexSet right;
};

}  // namespace nearbip
