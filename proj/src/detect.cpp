#include "nearbip/detect.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace nearbip {

namespace {

bool grow_path(const Graph& g, int r, std::vector<Vertex>& path, const Bitset& blocked) {
  if (static_cast<int>(path.size()) == r) return true;
  const Vertex last = path.back();
  Bitset candidates = g.neighbour_bits(last) - blocked;
  Bitset next_blocked = blocked | g.neighbour_bits(last);
  for (int v = candidates.first(); v >= 0; v = candidates.next(v + 1)) {
    path.push_back(v);
    Bitset b = next_blocked;
    b.set(v);
    if (grow_path(g, r, path, b)) return true;
    path.pop_back();
  }
  return false;
}

Bitset closed_neighbourhood(const Graph& g, Vertex v) {
  Bitset b = g.neighbour_bits(v);
  b.set(v);
  return b;
}

}  // namespace

std::optional<std::vector<Vertex>> find_induced_path(const Graph& g, int r) {
  if (r < 1) throw ContractViolation("find_induced_path: r must be at least 1");
  const int n = g.order();
  if (r > n) return std::nullopt;
  std::vector<Vertex> path;
  path.reserve(r);
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    Bitset blocked(n);
    blocked.set(s);
    if (grow_path(g, r, path, blocked)) return path;
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_induced_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    if (g.degree(c) < 3) continue;
    for (Vertex a : g.neighbours(c)) {
      Bitset rest = g.neighbour_bits(c) - closed_neighbourhood(g, a);
      for (int b = rest.next(a + 1); b >= 0; b = rest.next(b + 1)) {
        Bitset third = rest - closed_neighbourhood(g, b);
        int d = third.next(b + 1);
        if (d >= 0) return std::array<Vertex, 4>{c, a, b, d};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<Vertex, 4>> find_k4(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    Bitset common = g.neighbour_bits(u) & g.neighbour_bits(v);
    for (int w = common.next(v + 1); w >= 0; w = common.next(w + 1)) {
      int x = (common & g.neighbour_bits(w)).next(w + 1);
      if (x >= 0) return std::array<Vertex, 4>{u, v, w, x};
    }
  }
  return std::nullopt;
}

std::vector<Cycle4> enumerate_induced_c4(const Graph& g) {
  std::vector<Cycle4> out;
  for (Vertex v1 = 0; v1 < g.order(); ++v1) {
    const auto nb = g.neighbours(v1);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex v2 = nb[i];
      if (v2 < v1) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex v4 = nb[j];
        if (g.adjacent(v2, v4)) continue;
        Bitset opposite = (g.neighbour_bits(v2) & g.neighbour_bits(v4)) - closed_neighbourhood(g, v1);
        for (int v3 = opposite.next(v1 + 1); v3 >= 0; v3 = opposite.next(v3 + 1))
          out.push_back({v1, v2, v3, v4});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Bipartition> bipartition(const Graph& g, const VertexSet& vertices) {
  const Bitset member = g.to_bits(vertices);
  std::vector<int> side(g.order(), -1);
  Bipartition result;
  for (Vertex root : vertices) {
    if (side[root] >= 0) continue;
    side[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(u)) {
        if (!member.test(w)) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v : vertices) (side[v] == 0 ? result.left : result.right).push_back(v);
  std::sort(result.left.begin(), result.left.end());
  std::sort(result.right.begin(), result.right.end());
  return result;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return bipartition(g, all);
}

std::optional<std::vector<Vertex>> find_odd_cycle(const Graph& g, const VertexSet& vertices) {
  const Bitset member = g.to_bits(vertices);
  std::vector<int> depth(g.order(), -1);
  std::vector<Vertex> parent(g.order(), -1);
  for (Vertex root : vertices) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(u)) {
        if (!member.test(w)) continue;
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if ((depth[w] - depth[u]) % 2 == 0) {
          // walk both endpoints up to their common ancestor
          std::vector<Vertex> a{u}, b{w};
          Vertex x = u, y = w;
          while (depth[x] > depth[y]) a.push_back(x = parent[x]);
          while (depth[y] > depth[x]) b.push_back(y = parent[y]);
          while (x != y) {
            a.push_back(x = parent[x]);
            b.push_back(y = parent[y]);
          }
          b.pop_back();
          a.insert(a.end(), b.rbegin(), b.rend());
          return a;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& vertices) {
  const Bitset member = g.to_bits(vertices);
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexSet> out;
  for (Vertex root : normalized(vertices)) {
    if (seen[root]) continue;
    seen[root] = true;
    VertexSet comp{root};
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbours(comp[i]))
        if (member.test(w) && !seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  VertexSet all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  return connected_components(g, all);
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g, const VertexSet& vertices) {
  const Bitset member = g.to_bits(vertices);
  std::size_t edges = 0;
  for (Vertex v : vertices) edges += (g.neighbour_bits(v) & member).count();
  edges /= 2;
  const auto comps = connected_components(g, vertices);
  return edges + comps.size() == normalized(vertices).size();
}

bool is_forest(const Graph& g) { return g.edge_count() + connected_components(g).size() == static_cast<std::size_t>(g.order()); }

bool is_independent(const Graph& g, const VertexSet& vertices) {
  const Bitset member = g.to_bits(vertices);
  for (Vertex v : vertices)
    if (g.neighbour_bits(v).intersects(member)) return false;
  return true;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  const int n = g.order();
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::optional<VertexSet> dominating_clique_or_p3(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) throw ContractViolation("dominating_clique_or_p3: graph is disconnected");
  if (n == 0) return VertexSet{};
  const Bitset all = g.all_vertices();
  auto dominates = [&](std::initializer_list<Vertex> vs) {
    Bitset covered(n);
    for (Vertex v : vs) covered |= closed_neighbourhood(g, v);
    return covered == all;
  };
  for (Vertex u = 0; u < n; ++u)
    if (dominates({u})) return VertexSet{u};
  for (auto [u, v] : g.edges())
    if (dominates({u, v})) return VertexSet{u, v};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      for (Vertex w = v + 1; w < n; ++w) {
        int e = g.adjacent(u, v) + g.adjacent(u, w) + g.adjacent(v, w);
        if (e >= 2 && dominates({u, v, w})) return VertexSet{u, v, w};
      }
  return std::nullopt;
}

InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  const Bitset gone = g.to_bits(removed);
  VertexSet keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone.test(v)) keep.push_back(v);
  return induced_subgraph(g, keep);
}

}  // namespace nearbip
