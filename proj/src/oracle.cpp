#include "nearbip/oracle.hpp"

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "nearbip/detect.hpp"

namespace nearbip::oracle {

namespace {

using Mask = std::uint32_t;

void guard_order(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw GuardExceeded(std::string(what) + ": order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(limit));
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

bool forest_without(const Graph& g, Mask removed) {
  Dsu d(g.order());
  for (auto [u, v] : g.edges()) {
    if ((removed >> u & 1) || (removed >> v & 1)) continue;
    if (!d.unite(u, v)) return false;
  }
  return true;
}

bool bipartite_without(const std::vector<Mask>& adj, Mask removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> side(n, -1);
  std::vector<int> queue;
  for (int r = 0; r < n; ++r) {
    if ((removed >> r & 1) || side[r] >= 0) continue;
    side[r] = 0;
    queue.assign(1, r);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const int v = queue[h];
      Mask nb = adj[v] & ~removed;
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

VertexSet to_set(Mask m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

// Visits the k-subsets in lexicographic order, restricted to independent
// sets when `independent` holds; stops when visit returns true.
bool for_each_subset(const std::vector<Mask>& adj, int k, bool independent, const std::function<bool(Mask)>& visit) {
  const int n = static_cast<int>(adj.size());
  std::function<bool(int, int, Mask)> rec = [&](int from, int left, Mask chosen) {
    if (left == 0) return visit(chosen);
    for (int v = from; v <= n - left; ++v) {
      if (independent && (adj[v] & chosen)) continue;
      if (rec(v + 1, left - 1, chosen | Mask{1} << v)) return true;
    }
    return false;
  };
  return rec(0, k, 0);
}

std::optional<SetResult> first_of_size(const Graph& g, const std::vector<Mask>& adj, int k, bool independent,
                                       const std::function<bool(Mask)>& accept) {
  std::optional<SetResult> out;
  for_each_subset(adj, k, independent, [&](Mask m) {
    if (!accept(m)) return false;
    out = SetResult{k, to_set(m)};
    return true;
  });
  (void)g;
  return out;
}

}  // namespace

std::optional<SetResult> brute_min_ifvs(const Graph& g) {
  guard_order(g, kMaxSubsetOrder, "brute_min_ifvs");
  const auto adj = adjacency_masks(g);
  for (int k = 0; k <= g.order(); ++k)
    if (auto r = first_of_size(g, adj, k, true, [&](Mask m) { return forest_without(g, m); })) return r;
  return std::nullopt;
}

std::optional<SetResult> brute_max_ifvs(const Graph& g) {
  guard_order(g, kMaxSubsetOrder, "brute_max_ifvs");
  const auto adj = adjacency_masks(g);
  for (int k = g.order(); k >= 0; --k)
    if (auto r = first_of_size(g, adj, k, true, [&](Mask m) { return forest_without(g, m); })) return r;
  return std::nullopt;
}

std::optional<SetResult> brute_ifvs_of_size(const Graph& g, int k) {
  guard_order(g, kMaxSubsetOrder, "brute_ifvs_of_size");
  if (k < 0 || k > g.order()) return std::nullopt;
  const auto adj = adjacency_masks(g);
  return first_of_size(g, adj, k, true, [&](Mask m) { return forest_without(g, m); });
}

std::optional<SetResult> brute_min_ioct(const Graph& g) {
  guard_order(g, kMaxSubsetOrder, "brute_min_ioct");
  const auto adj = adjacency_masks(g);
  for (int k = 0; k <= g.order(); ++k)
    if (auto r = first_of_size(g, adj, k, true, [&](Mask m) { return bipartite_without(adj, m); })) return r;
  return std::nullopt;
}

SetResult brute_min_fvs(const Graph& g) {
  guard_order(g, kMaxSubsetOrder, "brute_min_fvs");
  const auto adj = adjacency_masks(g);
  for (int k = 0; k <= g.order(); ++k)
    if (auto r = first_of_size(g, adj, k, false, [&](Mask m) { return forest_without(g, m); })) return *r;
  return {};  // unreachable: removing every vertex leaves a forest
}

std::vector<VertexSet> brute_all_min_fvs(const Graph& g) {
  const int k = brute_min_fvs(g).size;
  const auto adj = adjacency_masks(g);
  std::vector<VertexSet> out;
  for_each_subset(adj, k, false, [&](Mask m) {
    if (forest_without(g, m)) out.push_back(to_set(m));
    return false;
  });
  return out;
}

namespace {

// Visits list-respecting colourings in lexicographic order until visit
// returns true. Properness is checked as colours are placed; the forest
// condition on complete colourings.
void for_each_lsac(const Graph& g, const ListAssignment& lists, ColouringMode mode,
                   const std::function<bool(const Coloring&)>& visit) {
  const int n = g.order();
  if (static_cast<int>(lists.size()) != n) throw ContractViolation("list assignment size differs from graph order");
  double product = 1;
  for (ColourSet l : lists) product *= std::max(1, colour_count(l));
  if (product > kMaxListProduct)
    throw GuardExceeded("brute_lsac: " + std::to_string(product) + " list combinations");
  Coloring c(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return (mode == ColouringMode::Proper || is_semi_acyclic(g, c)) && visit(c);
    for (int col = 1; col <= 3; ++col) {
      if (!has_colour(lists[v], col)) continue;
      bool ok = true;
      for (Vertex u : g.neighbours(v))
        if (u < v && c[u] == col) ok = false;
      if (!ok) continue;
      c[v] = col;
      if (rec(v + 1)) return true;
    }
    c[v] = 0;
    return false;
  };
  rec(0);
}

}  // namespace

std::optional<Coloring> brute_lsac(const Graph& g, const ListAssignment& lists, ColouringMode mode) {
  std::optional<Coloring> out;
  for_each_lsac(g, lists, mode, [&](const Coloring& c) {
    out = c;
    return true;
  });
  return out;
}

std::vector<Coloring> brute_all_lsac(const Graph& g, const ListAssignment& lists, ColouringMode mode) {
  std::vector<Coloring> out;
  for_each_lsac(g, lists, mode, [&](const Coloring& c) {
    out.push_back(c);
    return false;
  });
  return out;
}

namespace {

// Calls visit(ones, colouring) for every trouble-free colouring.
void for_each_trouble_free(const TroublesomeInstance& inst, ColouringMode mode,
                           const std::function<void(int, const Coloring&)>& visit) {
  validate(inst);
  const int k = static_cast<int>(inst.l13.size());
  if (k > kMaxSubsetOrder) throw GuardExceeded("brute_trouble_free: |l13| = " + std::to_string(k));
  Coloring c(inst.graph.order(), 0);
  for (Vertex v : inst.l2) c[v] = 2;
  for (Mask m = 0; m < (Mask{1} << k); ++m) {
    for (int i = 0; i < k; ++i) c[inst.l13[i]] = (m >> i & 1) ? 1 : 3;
    if (is_trouble_free(inst, c, mode)) visit(std::popcount(m), c);
  }
}

}  // namespace

std::optional<std::pair<long long, Coloring>> brute_trouble_free(const TroublesomeInstance& inst,
                                                                 ColouringMode mode) {
  std::optional<std::pair<long long, Coloring>> best;
  for_each_trouble_free(inst, mode, [&](int ones, const Coloring& c) {
    if (!best || ones < best->first) best = std::make_pair(ones, c);
  });
  return best;
}

std::vector<bool> brute_trouble_free_counts(const TroublesomeInstance& inst, ColouringMode mode) {
  std::vector<bool> counts(inst.l13.size() + 1, false);
  for_each_trouble_free(inst, mode, [&](int ones, const Coloring&) { counts[ones] = true; });
  return counts;
}

bool brute_hamilton_through_edge(const Graph& g, Edge e) {
  guard_order(g, kMaxHamiltonOrder, "brute_hamilton_through_edge");
  const int n = g.order();
  auto [s, t] = e;
  if (s < 0 || t < 0 || s >= n || t >= n || !g.adjacent(s, t)) throw ContractViolation("edge not in graph");
  if (n < 3) return false;
  const auto adj = adjacency_masks(g);
  // ends[mask]: vertices v such that some path from s visits exactly mask and
  // ends at v without using the edge st.
  std::vector<Mask> ends(std::size_t{1} << n, 0);
  ends[Mask{1} << s] = Mask{1} << s;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (!(m >> s & 1) || !ends[m]) continue;
    Mask at = ends[m];
    while (at) {
      const int v = std::countr_zero(at);
      at &= at - 1;
      Mask next = adj[v] & ~m;
      if (v == s) next &= ~(Mask{1} << t);
      while (next) {
        const int w = std::countr_zero(next);
        next &= next - 1;
        ends[m | Mask{1} << w] |= Mask{1} << w;
      }
    }
  }
  const Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
  return ends[full] >> t & 1;
}

bool brute_sat(int var_count, const std::vector<std::vector<int>>& clauses) {
  if (var_count > 24) throw GuardExceeded("brute_sat: " + std::to_string(var_count) + " variables");
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << var_count); ++a) {
    bool all = true;
    for (const auto& cl : clauses) {
      bool sat = false;
      for (int lit : cl) {
        const int v = std::abs(lit) - 1;
        if (((a >> v) & 1) == (lit > 0 ? 1U : 0U)) sat = true;
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace nearbip::oracle
