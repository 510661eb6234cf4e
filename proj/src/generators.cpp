#include "nearbip/generators.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

#include "nearbip/detect.hpp"
#include "nearbip/transform.hpp"

namespace nearbip {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (part_of[i] != part_of[j]) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph cube_graph() {
  std::vector<Edge> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if (v < (v ^ bit)) e.emplace_back(v, v ^ bit);
  return Graph(8, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

Graph prism_graph() {
  const std::vector<Edge> e{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, e);
}

Graph rook_graph(int r) {
  std::vector<Edge> e;
  for (int a = 0; a < r * r; ++a)
    for (int b = a + 1; b < r * r; ++b)
      if (a / r == b / r || a % r == b % r) e.emplace_back(a, b);
  return Graph(r * r, e);
}

Graph named_graph(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "cube" || lower == "q3") return cube_graph();
  if (lower == "petersen") return petersen_graph();
  if (lower == "prism") return prism_graph();
  if (lower == "k33") return complete_bipartite(3, 3);
  if (lower == "claw") return star_graph(3);
  if (lower == "rook3") return rook_graph(3);
  const std::pair<std::string_view, Graph (*)(int)> sized[] = {
      {"path", path_graph}, {"cycle", cycle_graph}, {"complete", complete_graph}, {"star", star_graph},
      {"p", path_graph},    {"c", cycle_graph},     {"k", complete_graph}};
  std::string_view view = lower;
  for (auto [prefix, make] : sized) {
    if (!view.starts_with(prefix)) continue;
    auto digits = view.substr(prefix.size());
    int n = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty()) return make(n);
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(p)) e.emplace_back(i, j);
  return Graph(n, e);
}

namespace {

Graph relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  for (int i = g.order() - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), e);
}

Graph with_new_vertex(const Graph& g, const std::vector<Vertex>& nbrs) {
  auto e = g.edges();
  for (Vertex u : nbrs) e.emplace_back(u, g.order());
  return Graph(g.order() + 1, e);
}

Graph growth_graph(int n, Rng& rng) {
  if (n == 0) return Graph(0);
  const double density = 0.1 + 0.5 * rng.unit();
  Graph g(1);
  for (int v = 1; v < n; ++v) {
    bool placed = false;
    for (int attempt = 0; attempt < 30 && !placed; ++attempt) {
      std::vector<Vertex> nbrs;
      for (int u = 0; u < v; ++u)
        if (rng.chance(density)) nbrs.push_back(u);
      if (nbrs.empty()) nbrs.push_back(static_cast<Vertex>(rng.below(v)));
      Graph candidate = with_new_vertex(g, nbrs);
      if (is_p5_free(candidate)) {
        g = std::move(candidate);
        placed = true;
      }
    }
    if (!placed) {
      // substituting a twin preserves P5-freeness
      const Vertex twin = static_cast<Vertex>(rng.below(v));
      std::vector<Vertex> nbrs(g.neighbours(twin).begin(), g.neighbours(twin).end());
      if (rng.chance(0.5)) nbrs.push_back(twin);
      g = with_new_vertex(g, nbrs);
    }
  }
  return g;
}

Graph perturbed_cograph(int n, Rng& rng) {
  Graph g = random_cograph(n, rng, 0.2 + 0.3 * rng.unit());
  if (n < 2) return g;
  for (int k = 0; k < n; ++k) {
    Vertex a = static_cast<Vertex>(rng.below(n));
    Vertex b = static_cast<Vertex>(rng.below(n));
    if (a == b) continue;
    std::vector<Edge> e;
    for (auto edge : g.edges())
      if (edge != Edge{std::min(a, b), std::max(a, b)}) e.push_back(edge);
    if (!g.adjacent(a, b)) e.emplace_back(a, b);
    Graph candidate(n, e);
    if (is_p5_free(candidate)) g = std::move(candidate);
  }
  return g;
}

}  // namespace

Graph random_cograph(int n, Rng& rng, double join_probability) {
  if (n <= 1) return Graph(n);
  const int k = rng.between(1, n - 1);
  Graph a = random_cograph(k, rng, join_probability);
  Graph b = random_cograph(n - k, rng, join_probability);
  return rng.chance(join_probability) ? join(a, b) : disjoint_union(a, b);
}

Graph random_split_graph(int n, Rng& rng, int max_clique) {
  if (n == 0) return Graph(0);
  const int k = rng.between(1, std::max(1, std::min(max_clique, n)));
  const double q = 0.2 + 0.6 * rng.unit();
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
  for (int v = k; v < n; ++v)
    for (int c = 0; c < k; ++c)
      if (rng.chance(q)) e.emplace_back(c, v);
  return Graph(n, e);
}

P5FreeFamily parse_family(std::string_view name) {
  for (auto f : {P5FreeFamily::Any, P5FreeFamily::Cograph, P5FreeFamily::Split, P5FreeFamily::Multipartite,
                 P5FreeFamily::Growth, P5FreeFamily::Rejection, P5FreeFamily::PerturbedCograph})
    if (family_name(f) == name) return f;
  throw std::invalid_argument("unknown P5-free family '" + std::string(name) + "'");
}

std::string_view family_name(P5FreeFamily f) {
  switch (f) {
    case P5FreeFamily::Any: return "any";
    case P5FreeFamily::Cograph: return "cograph";
    case P5FreeFamily::Split: return "split";
    case P5FreeFamily::Multipartite: return "multipartite";
    case P5FreeFamily::Growth: return "growth";
    case P5FreeFamily::Rejection: return "rejection";
    case P5FreeFamily::PerturbedCograph: return "perturbed-cograph";
  }
  return "any";
}

Graph random_p5free_graph(int n, std::uint64_t seed, P5FreeFamily family) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Rng rng(seed);
  if (family == P5FreeFamily::Any) {
    static constexpr P5FreeFamily pool[] = {P5FreeFamily::Cograph, P5FreeFamily::Split, P5FreeFamily::Multipartite,
                                            P5FreeFamily::Growth, P5FreeFamily::PerturbedCograph,
                                            P5FreeFamily::Growth, P5FreeFamily::Rejection};
    const int choices = n <= 9 ? 7 : 6;
    family = pool[rng.below(choices)];
  }
  Graph g;
  switch (family) {
    case P5FreeFamily::Cograph: g = random_cograph(n, rng, 0.15 + 0.35 * rng.unit()); break;
    case P5FreeFamily::Split: g = random_split_graph(n, rng, rng.between(1, 4)); break;
    case P5FreeFamily::Multipartite: {
      const int parts = std::max(1, std::min(n, rng.between(1, 4)));
      std::vector<int> sizes(parts, n > 0 ? 1 : 0);
      for (int extra = n - parts; extra > 0; --extra) ++sizes[rng.below(parts)];
      g = complete_multipartite(n > 0 ? sizes : std::vector<int>{});
      break;
    }
    case P5FreeFamily::Growth: g = growth_graph(n, rng); break;
    case P5FreeFamily::PerturbedCograph: g = perturbed_cograph(n, rng); break;
    case P5FreeFamily::Rejection: {
      bool found = false;
      for (int attempt = 0; attempt < 400 && !found; ++attempt) {
        Graph candidate = random_graph(n, 0.1 + 0.8 * rng.unit(), rng.below(1ULL << 62));
        if (is_p5_free(candidate)) {
          g = std::move(candidate);
          found = true;
        }
      }
      if (!found)
        throw GenerationError("random P5-free generation budget exhausted for n=" + std::to_string(n) +
                              " in the rejection family; lower n or choose another family");
      break;
    }
    case P5FreeFamily::Any: break;
  }
  g = relabel(g, rng);
  if (!is_p5_free(g)) throw GenerationError("generated graph failed the P5-freeness self-check");
  return g;
}

}  // namespace nearbip
