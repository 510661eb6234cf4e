#include "support.hpp"

#include <algorithm>
#include <stdexcept>

#include "nearbip/detect.hpp"
#include "nearbip/ifvs.hpp"
#include "nearbip/transform.hpp"

namespace nearbip::testing {

namespace {

Graph random_tree(int n, Rng& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(static_cast<Vertex>(rng.below(v)), v);
  return Graph(n, e);
}

Graph wheel(int rim) {
  std::vector<Edge> e;
  for (int i = 0; i < rim; ++i) {
    e.emplace_back(0, 1 + i);
    e.emplace_back(1 + i, 1 + (i + 1) % rim);
  }
  return Graph(rim + 1, e);
}

}  // namespace

std::vector<Named> fixed_corpus() {
  std::vector<Named> out;
  Rng rng(2024);
  for (int n = 1; n <= 6; ++n) out.push_back({"path" + std::to_string(n), path_graph(n)});
  out.push_back({"star5", star_graph(5)});
  out.push_back({"forest-p3+p2", disjoint_union(path_graph(3), path_graph(2))});
  for (int i = 0; i < 4; ++i) out.push_back({"tree" + std::to_string(i), random_tree(6 + 2 * i, rng)});
  for (int n = 3; n <= 8; ++n) out.push_back({"cycle" + std::to_string(n), cycle_graph(n)});
  const std::vector<std::vector<int>> parts = {{1, 1, 1}, {2, 2}, {2, 3}, {3, 4}, {1, 2, 3},
                                               {2, 2, 2}, {1, 1, 4}, {1, 1, 1, 1}, {2, 2, 3}};
  for (const auto& p : parts) {
    std::string name = "multipartite";
    for (int s : p) name += "-" + std::to_string(s);
    out.push_back({name, complete_multipartite(p)});
  }
  for (int i = 0; i < 6; ++i) out.push_back({"split" + std::to_string(i), random_split_graph(5 + i, rng, 3)});
  for (int i = 0; i < 6; ++i)
    out.push_back({"cograph" + std::to_string(i), random_cograph(5 + i, rng, 0.3 + 0.05 * i)});
  return out;
}

std::vector<Named> random_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
  std::vector<Named> out;
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = rng.between(min_n, max_n);
    out.push_back({"random" + std::to_string(i), random_p5free_graph(n, rng.below(~std::uint64_t{0}))});
  }
  return out;
}

Graph near_bipartite_growth(int n, std::uint64_t seed, int max_degree) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      const int d = rng.between(1, std::min(v, max_degree));
      std::vector<Vertex> pick;
      while (static_cast<int>(pick.size()) < d) {
        const auto u = static_cast<Vertex>(rng.below(v));
        if (std::find(pick.begin(), pick.end(), u) == pick.end()) pick.push_back(u);
      }
      auto next = edges;
      for (Vertex u : pick) next.emplace_back(u, v);
      const Graph h(v + 1, next);
      if (!is_p5_free(h) || !is_near_bipartite(h, {.check_p5 = false}).verdict) continue;
      edges = std::move(next);
      break;
    }
  }
  return Graph(n, edges);
}

std::vector<Named> order40_corpus() {
  std::vector<Named> out;
  for (int seed = 1; seed <= 6; ++seed)
    for (int d : {3, 6, 10})
      out.push_back({"growth-s" + std::to_string(seed) + "-d" + std::to_string(d), near_bipartite_growth(40, seed, d)});
  out.push_back({"k-1-1-38", complete_multipartite({1, 1, 38})});
  out.push_back({"k-2-38", complete_bipartite(2, 38)});
  Graph wheels(0);
  for (int i = 0; i < 8; ++i) wheels = disjoint_union(wheels, wheel(4));
  out.push_back({"8-wheels", wheels});
  Graph stars(0);
  for (int i = 0; i < 3; ++i) stars = disjoint_union(stars, star_graph(12));
  out.push_back({"hub-over-stars", join(Graph(1), stars)});
  return out;
}

ListAssignment random_lists(int n, Rng& rng) {
  static constexpr ColourSet pool[] = {0b111, 0b111, 0b111, 0b011, 0b101, 0b110, 0b001, 0b010, 0b100};
  ListAssignment lists(n);
  for (auto& l : lists) l = pool[rng.below(std::size(pool))];
  return lists;
}

std::optional<TroublesomeInstance> random_troublesome(std::uint64_t seed, int max_n, int max_l13) {
  Rng rng(seed);
  const int n = rng.between(4, max_n);
  const Graph g = random_p5free_graph(n, seed * 31 + 7);
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
    VertexSet l2;
    for (Vertex v : order) {
      if (!rng.chance(0.7)) continue;
      if (std::none_of(l2.begin(), l2.end(), [&](Vertex u) { return g.adjacent(u, v); })) l2.push_back(v);
    }
    l2 = normalized(l2);
    VertexSet l13;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(l2.begin(), l2.end(), v)) l13.push_back(v);
    if (static_cast<int>(l13.size()) > max_l13 || !bipartition(g, l13)) continue;
    return TroublesomeInstance{g, l2, l13};
  }
  return std::nullopt;
}

AuxGraph random_aux_h(Rng& rng, int n) {
  AuxGraph a(n);
  std::vector<int> part(n);
  for (auto& p : part) p = static_cast<int>(rng.below(2));
  const double red = 0.15 + 0.3 * rng.unit();
  const double blue = 0.1 + 0.3 * rng.unit();
  for (int u = 0; u < n; ++u) {
    a.weight[u] = 1;
    a.members[u] = {u};
    for (int v = u + 1; v < n; ++v) {
      if (part[u] != part[v] && rng.chance(red))
        a.set_edge(u, v, EdgeLabel::Red);
      else if (rng.chance(blue))
        a.set_edge(u, v, EdgeLabel::Blue);
    }
  }
  assign_red_sides(a);
  return a;
}

AuxGraph random_aux_hstar(Rng& rng, int n) {
  AuxGraph a(n);
  std::vector<int> clique(n);
  const int cliques = rng.between(1, std::max(1, n / 2));
  for (auto& c : clique) c = static_cast<int>(rng.below(cliques));
  for (int u = 0; u < n; ++u) {
    a.weight[u] = rng.between(1, 3);
    a.members[u] = {u};
    for (int v = u + 1; v < n; ++v)
      if (clique[u] == clique[v]) a.set_edge(u, v, EdgeLabel::Blue);
  }
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  for (int i = 0; i + 1 < n; i += 2)
    if (rng.chance(0.7) && clique[order[i]] != clique[order[i + 1]])
      a.set_edge(order[i], order[i + 1], EdgeLabel::Red);
  assign_red_sides(a);
  return a;
}

std::vector<std::vector<int>> aux_colourings(const AuxGraph& a) {
  const int n = a.order();
  if (n > 20) throw std::length_error("aux_colourings: too many vertices");
  std::vector<std::vector<int>> out;
  std::vector<int> c(n);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      c[v] = (m >> v & 1) ? 1 : 3;
      if (a.colour[v] != 0 && a.colour[v] != c[v]) ok = false;
    }
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) {
        if (!a.alive[u] || !a.alive[v]) continue;
        if (a.label[u][v] == EdgeLabel::Red && c[u] == c[v]) ok = false;
        if (a.label[u][v] == EdgeLabel::Blue && c[u] == 3 && c[v] == 3) ok = false;
      }
    if (ok) out.push_back(c);
  }
  return out;
}

std::optional<CnfFormula> random_normalized_formula(Rng& rng, int max_vars, int max_clauses, int max_width) {
  CnfFormula phi;
  phi.var_count = rng.between(2, max_vars);
  const int m = rng.between(2, max_clauses);
  for (int i = 0; i < m; ++i) {
    std::vector<int> clause;
    const int width = rng.between(2, max_width);
    for (int j = 0; j < width; ++j) {
      const int var = rng.between(1, phi.var_count);
      clause.push_back(rng.chance(0.5) ? var : -var);
    }
    phi.clauses.push_back(clause);
  }
  try {
    CnfFormula out = normalize(phi);
    if (out.clauses.empty()) return std::nullopt;
    return out;
  } catch (const NormalizationError&) {
    return std::nullopt;
  }
}

bool valid_lsac(const Graph& g, const ListAssignment& lists, const Coloring& c, ColouringMode mode) {
  if (!is_total(c) || !respects_lists(lists, c) || !is_proper(g, c)) return false;
  return mode == ColouringMode::Proper || is_semi_acyclic(g, c);
}

}  // namespace nearbip::testing
