#include "nearbip/trouble_free.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "nearbip/detect.hpp"
#include "nearbip/log.hpp"

namespace nearbip {

void validate(const TroublesomeInstance& inst) {
  const int n = inst.graph.order();
  std::vector<int> seen(n, 0);
  for (const VertexSet* part : {&inst.l2, &inst.l13})
    for (Vertex v : *part) {
      if (v < 0 || v >= n) throw ContractViolation("troublesome instance lists an out-of-range vertex");
      if (seen[v]++) throw ContractViolation("vertex " + std::to_string(v) + " appears in both lists");
    }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw ContractViolation("vertex " + std::to_string(v) + " has no list");
  if (!is_independent(inst.graph, normalized(inst.l2)))
    throw ContractViolation("vertices with list {2} are not independent");
  if (!bipartition(inst.graph, normalized(inst.l13)))
    throw ContractViolation("vertices with list {1,3} do not induce a bipartite graph");
}

std::vector<Edge> strongly_tricky_pairs(const TroublesomeInstance& inst) {
  const Graph& g = inst.graph;
  const Bitset l2 = g.to_bits(inst.l2);
  VertexSet l13 = normalized(inst.l13);
  std::vector<Edge> out;
  for (std::size_t a = 0; a < l13.size(); ++a) {
    const Bitset nu = g.neighbour_bits(l13[a]) & l2;
    if (nu.count() < 2) continue;
    for (std::size_t b = a + 1; b < l13.size(); ++b) {
      if (g.adjacent(l13[a], l13[b])) continue;
      if ((nu & g.neighbour_bits(l13[b])).count() >= 2) out.emplace_back(l13[a], l13[b]);
    }
  }
  return out;
}

bool is_trouble_free(const TroublesomeInstance& inst, const Coloring& c, ColouringMode mode) {
  if (static_cast<int>(c.size()) != inst.graph.order()) return false;
  for (Vertex v : inst.l2)
    if (c[v] != 2) return false;
  for (Vertex v : inst.l13)
    if (c[v] != 1 && c[v] != 3) return false;
  if (!is_proper(inst.graph, c)) return false;
  if (mode == ColouringMode::SemiAcyclic)
    for (auto [u, v] : strongly_tricky_pairs(inst))
      if (c[u] == 3 && c[v] == 3) return false;
  return true;
}

bool is_trouble_free(const TroublesomeInstance& inst, const Coloring& c) {
  return is_trouble_free(inst, c, ColouringMode::SemiAcyclic);
}

AuxGraph::AuxGraph(int n)
    : weight(n, 1),
      colour(n, 0),
      alive(n, 1),
      label(n, std::vector<EdgeLabel>(n, EdgeLabel::None)),
      members(n),
      red_comp(n, -1),
      side(n, 0) {}

VertexSet AuxGraph::neighbours(Vertex v, EdgeLabel l) const {
  VertexSet out;
  for (int u = 0; u < order(); ++u)
    if (alive[u] && label[v][u] == l) out.push_back(u);
  return out;
}

VertexSet AuxGraph::alive_vertices() const {
  VertexSet out;
  for (int v = 0; v < order(); ++v)
    if (alive[v]) out.push_back(v);
  return out;
}

long long AuxGraph::ones_weight() const {
  long long w = 0;
  for (int v = 0; v < order(); ++v)
    if (colour[v] == 1) w += weight[v];
  return w;
}

std::string AuxGraph::to_dot() const {
  std::string out = "graph aux {\n";
  for (int v = 0; v < order(); ++v) {
    if (!alive[v]) continue;
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + " w=" + std::to_string(weight[v]);
    if (colour[v]) out += " c=" + std::to_string(colour[v]);
    out += "\"];\n";
  }
  for (int u = 0; u < order(); ++u)
    for (int v = u + 1; v < order(); ++v) {
      if (!alive[u] || !alive[v] || label[u][v] == EdgeLabel::None) continue;
      out += "  " + std::to_string(u) + " -- " + std::to_string(v) +
             (label[u][v] == EdgeLabel::Red ? " [color=red];\n" : " [color=blue];\n");
    }
  return out + "}\n";
}

void AuxCounters::add(const AuxCounters& o) {
  for (std::size_t i = 0; i < fired.size(); ++i) fired[i] += o.fired[i];
  options += o.options;
  fallbacks += o.fallbacks;
}

void assign_red_sides(AuxGraph& a) {
  const int n = a.order();
  std::fill(a.red_comp.begin(), a.red_comp.end(), -1);
  int comps = 0;
  std::vector<Vertex> queue;
  for (int r = 0; r < n; ++r) {
    if (!a.alive[r] || a.red_comp[r] >= 0) continue;
    a.red_comp[r] = comps;
    a.side[r] = 0;
    queue.assign(1, r);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (int w = 0; w < n; ++w) {
        if (!a.alive[w] || a.label[v][w] != EdgeLabel::Red) continue;
        if (a.red_comp[w] < 0) {
          a.red_comp[w] = comps;
          a.side[w] = 1 - a.side[v];
          queue.push_back(w);
        } else if (a.side[w] == a.side[v]) {
          throw InvariantBreach("red edges contain an odd cycle", {v, w});
        }
      }
    }
    ++comps;
  }
}

AuxGraph build_h(const TroublesomeInstance& inst, bool blue) {
  validate(inst);
  const int k = static_cast<int>(inst.l13.size());
  AuxGraph h(k);
  std::vector<int> pos(inst.graph.order(), -1);
  for (int i = 0; i < k; ++i) {
    pos[inst.l13[i]] = i;
    h.members[i] = {inst.l13[i]};
  }
  for (auto [u, v] : inst.graph.edges())
    if (pos[u] >= 0 && pos[v] >= 0) h.set_edge(pos[u], pos[v], EdgeLabel::Red);
  if (blue)
    for (auto [u, v] : strongly_tricky_pairs(inst)) h.set_edge(pos[u], pos[v], EdgeLabel::Blue);
  assign_red_sides(h);
  return h;
}

namespace {

// Gives v colour c unless it already has it. Returns No on a clash.
AuxOutcome force(AuxGraph& a, Vertex v, int c) {
  if (a.colour[v] == c) return AuxOutcome::Unchanged;
  if (a.colour[v] != 0) return AuxOutcome::No;
  a.colour[v] = c;
  return AuxOutcome::Changed;
}

std::vector<int> blue_components(const AuxGraph& a, const std::vector<char>& in, int* count) {
  const int n = a.order();
  std::vector<int> comp(n, -1);
  int c = 0;
  std::vector<Vertex> queue;
  for (int r = 0; r < n; ++r) {
    if (!in[r] || comp[r] >= 0) continue;
    comp[r] = c;
    queue.assign(1, r);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int w = 0; w < n; ++w)
        if (in[w] && comp[w] < 0 && a.label[queue[h]][w] == EdgeLabel::Blue) {
          comp[w] = c;
          queue.push_back(w);
        }
    ++c;
  }
  *count = c;
  return comp;
}

AuxOutcome apply_rule(AuxGraph& a, int rule) {
  const int n = a.order();
  auto edge = [&](int u, int v, EdgeLabel l) { return a.alive[u] && a.alive[v] && a.label[u][v] == l; };
  switch (rule) {
    case 1:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (!edge(u, v, EdgeLabel::Blue) || a.red_comp[u] != a.red_comp[v] || a.side[u] != a.side[v]) continue;
          if (a.colour[u] == 1 && a.colour[v] == 1) continue;
          if (force(a, u, 1) == AuxOutcome::No || force(a, v, 1) == AuxOutcome::No) return AuxOutcome::No;
          return AuxOutcome::Changed;
        }
      return AuxOutcome::Unchanged;
    case 2:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (edge(u, v, EdgeLabel::Blue) && a.red_comp[u] == a.red_comp[v] && a.side[u] != a.side[v]) {
            a.set_edge(u, v, EdgeLabel::None);
            return AuxOutcome::Changed;
          }
      return AuxOutcome::Unchanged;
    case 3: {
      std::map<int, int> sides;
      for (int u = 0; u < n; ++u) {
        if (!a.alive[u] || a.colour[u] == 1) continue;
        sides.clear();
        for (int v = 0; v < n; ++v)
          if (edge(u, v, EdgeLabel::Blue) && a.red_comp[v] != a.red_comp[u]) sides[a.red_comp[v]] |= 1 << a.side[v];
        for (auto [comp, mask] : sides)
          if (mask == 3) return force(a, u, 1);
      }
      return AuxOutcome::Unchanged;
    }
    case 4:
      for (int u = 0; u < n; ++u) {
        if (!a.alive[u] || a.colour[u] != 0) continue;
        for (int v = 0; v < n; ++v)
          if (edge(u, v, EdgeLabel::Blue) && a.colour[v] == 3) return force(a, u, 1);
      }
      return AuxOutcome::Unchanged;
    case 5:
      for (int u = 0; u < n; ++u) {
        if (!a.alive[u] || a.colour[u] != 0) continue;
        for (int v = 0; v < n; ++v)
          if (edge(u, v, EdgeLabel::Red) && a.colour[v] != 0) return force(a, u, 4 - a.colour[v]);
      }
      return AuxOutcome::Unchanged;
    case 6:
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (!a.alive[u] || !a.alive[v] || a.colour[u] == 0 || a.colour[u] != a.colour[v]) continue;
          if (a.label[u][v] == EdgeLabel::Red) return AuxOutcome::No;
          if (a.label[u][v] == EdgeLabel::Blue && a.colour[u] == 3) return AuxOutcome::No;
        }
      return AuxOutcome::Unchanged;
    case 7: {
      bool any = false;
      for (int v = 0; v < n; ++v)
        if (a.alive[v] && a.colour[v] != 0) {
          a.alive[v] = 0;
          any = true;
        }
      return any ? AuxOutcome::Changed : AuxOutcome::Unchanged;
    }
    case 8: {
      int q = 0;
      const auto bc = blue_components(a, a.alive, &q);
      std::map<std::pair<int, int>, std::vector<Edge>> between;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (edge(u, v, EdgeLabel::Red) && bc[u] != bc[v])
            between[{std::min(bc[u], bc[v]), std::max(bc[u], bc[v])}].emplace_back(u, v);
      for (const auto& [key, reds] : between) {
        if (reds.size() < 2) continue;
        const Vertex keep[] = {reds[0].first, reds[0].second, reds[1].first, reds[1].second};
        bool changed = false;
        for (int w = 0; w < n; ++w) {
          if (!a.alive[w] || (bc[w] != key.first && bc[w] != key.second)) continue;
          if (std::find(std::begin(keep), std::end(keep), w) != std::end(keep)) continue;
          const auto r = force(a, w, 1);
          if (r == AuxOutcome::No) return r;
          changed |= r == AuxOutcome::Changed;
        }
        if (changed) return AuxOutcome::Changed;
      }
      return AuxOutcome::Unchanged;
    }
    default: throw ContractViolation("auxiliary rules are numbered 1..8");
  }
}

bool reduce_with(AuxGraph& a, int last_rule, AuxCounters* counters) {
  int rule = 1;
  while (rule <= last_rule) {
    const auto r = apply_aux_rule(a, rule, counters);
    if (r == AuxOutcome::No) return false;
    rule = r == AuxOutcome::Changed ? 1 : rule + 1;
  }
  return true;
}

}  // namespace

AuxOutcome apply_aux_rule(AuxGraph& a, int rule, AuxCounters* counters) {
  const auto r = apply_rule(a, rule);
  if (counters && r != AuxOutcome::Unchanged) ++counters->fired[rule];
  return r;
}

bool reduce_h(AuxGraph& h, AuxCounters* counters) { return reduce_with(h, 7, counters); }

bool reduce_hstar(AuxGraph& hs, AuxCounters* counters) { return reduce_with(hs, 8, counters); }

AuxGraph build_hstar(const AuxGraph& h) {
  std::map<int, std::array<VertexSet, 2>> comps;
  std::vector<int> order_of;
  for (int v = 0; v < h.order(); ++v) {
    if (!h.alive[v]) continue;
    auto [it, fresh] = comps.try_emplace(h.red_comp[v]);
    if (fresh) order_of.push_back(h.red_comp[v]);
    it->second[h.side[v]].push_back(v);
  }
  std::vector<std::array<int, 2>> node(h.order(), {-1, -1});
  std::vector<int> node_of(h.order(), -1);
  int count = 0;
  for (int c : order_of) {
    auto& sides = comps[c];
    if (sides[0].empty()) std::swap(sides[0], sides[1]);
    count += sides[1].empty() ? 1 : 2;
  }
  AuxGraph hs(count);
  int next = 0;
  for (std::size_t ci = 0; ci < order_of.size(); ++ci) {
    const auto& sides = comps[order_of[ci]];
    int ids[2] = {-1, -1};
    for (int s = 0; s < 2; ++s) {
      if (sides[s].empty()) continue;
      const int x = next++;
      ids[s] = x;
      hs.weight[x] = 0;
      hs.red_comp[x] = static_cast<int>(ci);
      hs.side[x] = s;
      for (Vertex v : sides[s]) {
        node_of[v] = x;
        hs.weight[x] += h.weight[v];
        hs.members[x].insert(hs.members[x].end(), h.members[v].begin(), h.members[v].end());
      }
      std::sort(hs.members[x].begin(), hs.members[x].end());
    }
    if (ids[1] >= 0) hs.set_edge(ids[0], ids[1], EdgeLabel::Red);
  }
  for (int u = 0; u < h.order(); ++u)
    for (int v = u + 1; v < h.order(); ++v) {
      if (!h.alive[u] || !h.alive[v] || h.label[u][v] != EdgeLabel::Blue) continue;
      if (h.red_comp[u] == h.red_comp[v]) continue;
      hs.set_edge(node_of[u], node_of[v], EdgeLabel::Blue);
    }
  return hs;
}

namespace {

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      if (p[a] == p[b]) return false;
      if (g.adjacent(p[a], p[b]) != (b == a + 1)) return false;
    }
  return true;
}

// Case analysis for a blue path u - v - w without the blue edge uw.
std::vector<Vertex> blue_path_witness(const AuxGraph& hs, const TroublesomeInstance& inst, Vertex u, Vertex v,
                                      Vertex w) {
  const Graph& g = inst.graph;
  const Bitset l2 = g.to_bits(inst.l2);
  auto common = [&](Vertex a, Vertex b) { return (g.neighbour_bits(a) & g.neighbour_bits(b) & l2); };
  auto blue = [&](Vertex a, Vertex b) { return !g.adjacent(a, b) && common(a, b).count() >= 2; };
  // Case 1: a single member v' carries both blue edges.
  for (Vertex vp : hs.members[v])
    for (Vertex up : hs.members[u]) {
      if (!blue(up, vp)) continue;
      for (Vertex wp : hs.members[w]) {
        if (!blue(vp, wp)) continue;
        const Bitset ps = common(up, vp) - g.neighbour_bits(wp);
        const Bitset qs = common(vp, wp) - g.neighbour_bits(up);
        if (ps.none() || qs.none()) continue;
        std::vector<Vertex> cand{up, ps.first(), vp, qs.first(), wp};
        if (is_induced_path(g, cand)) return cand;
      }
    }
  // Case 2: distinct members v', v''; search the configuration they span.
  VertexSet pool;
  for (Vertex vp : hs.members[v])
    for (Vertex up : hs.members[u])
      if (blue(up, vp)) {
        pool.push_back(up);
        pool.push_back(vp);
        common(up, vp).for_each([&](int p) { pool.push_back(p); });
      }
  for (Vertex vp : hs.members[v])
    for (Vertex wp : hs.members[w])
      if (blue(vp, wp)) {
        pool.push_back(vp);
        pool.push_back(wp);
        common(vp, wp).for_each([&](int q) { pool.push_back(q); });
      }
  const Bitset vm = g.to_bits(hs.members[v]);
  for (Vertex s = 0; s < g.order(); ++s)
    if ((g.neighbour_bits(s) & vm).count() >= 2) pool.push_back(s);
  pool = normalized(std::move(pool));
  auto sub = induced_subgraph(g, pool);
  if (auto p = find_induced_path(sub.graph, 5)) {
    std::vector<Vertex> out;
    for (Vertex x : *p) out.push_back(sub.to_parent[x]);
    return out;
  }
  if (auto p = find_induced_path(g, 5)) return *p;
  return {};
}

}  // namespace

std::optional<std::vector<Vertex>> assert_blue_cliques(const AuxGraph& hs, const TroublesomeInstance& inst) {
  for (int v = 0; v < hs.order(); ++v) {
    if (!hs.alive[v]) continue;
    const VertexSet nb = hs.neighbours(v, EdgeLabel::Blue);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b)
        if (hs.label[nb[a]][nb[b]] != EdgeLabel::Blue) return blue_path_witness(hs, inst, nb[a], v, nb[b]);
  }
  return std::nullopt;
}

namespace {

// Rules 4-6 by worklist on the free part of a contracted graph.
class Propagator {
 public:
  explicit Propagator(const AuxGraph& hs) : hs_(hs), red_(hs.order()), blue_(hs.order()) {
    for (int u = 0; u < hs.order(); ++u) {
      if (!live(u)) continue;
      for (int v = 0; v < hs.order(); ++v) {
        if (!live(v)) continue;
        if (hs.label[u][v] == EdgeLabel::Red) red_[u].push_back(v);
        if (hs.label[u][v] == EdgeLabel::Blue) blue_[u].push_back(v);
      }
    }
  }

  bool live(Vertex v) const { return hs_.alive[v] && hs_.colour[v] == 0; }
  const VertexSet& red(Vertex v) const { return red_[v]; }
  const VertexSet& blue(Vertex v) const { return blue_[v]; }

  // Colours `seeds` (already set in col) outward. False on a contradiction.
  bool run(std::vector<int>& col, std::vector<Vertex> work) const {
    while (!work.empty()) {
      const Vertex v = work.back();
      work.pop_back();
      for (Vertex u : red_[v]) {
        if (col[u] == 0) {
          col[u] = 4 - col[v];
          work.push_back(u);
        } else if (col[u] == col[v]) {
          return false;
        }
      }
      if (col[v] != 3) continue;
      for (Vertex u : blue_[v]) {
        if (col[u] == 0) {
          col[u] = 1;
          work.push_back(u);
        } else if (col[u] == 3) {
          return false;
        }
      }
    }
    return true;
  }

  bool feasible_on(const std::vector<int>& col, const VertexSet& vs) const {
    for (Vertex v : vs) {
      if (col[v] != 1 && col[v] != 3) return false;
      for (Vertex u : red_[v])
        if (col[u] == col[v]) return false;
      if (col[v] == 3)
        for (Vertex u : blue_[v])
          if (col[u] == 3) return false;
    }
    return true;
  }

 private:
  const AuxGraph& hs_;
  std::vector<VertexSet> red_;
  std::vector<VertexSet> blue_;
};

struct ComponentSearch {
  const AuxGraph& hs;
  const Propagator& prop;
  const VertexSet& vertices;
  const std::vector<int>& bcomp;  // blue component per vertex
  AuxCounters& counters;
  std::vector<AuxOption>& out;

  void record(const std::vector<int>& col) {
    ++counters.options;
    if (!prop.feasible_on(col, vertices)) return;
    AuxOption o;
    for (Vertex v : vertices) {
      o.colours.emplace_back(v, col[v]);
      if (col[v] == 1) o.weight += hs.weight[v];
    }
    out.push_back(std::move(o));
  }

  VertexSet uncoloured(const std::vector<int>& col) const {
    VertexSet u;
    for (Vertex v : vertices)
      if (col[v] == 0) u.push_back(v);
    return u;
  }

  // Plain branching on the first free vertex; used where no structural
  // argument applies.
  void branch_all(std::vector<int> col) {
    const VertexSet free = uncoloured(col);
    if (free.empty()) {
      record(col);
      return;
    }
    for (int c : {1, 3}) {
      auto next = col;
      next[free.front()] = c;
      if (prop.run(next, {free.front()})) branch_all(std::move(next));
    }
  }

  // Under the assumption that every blue component holds a colour-3 vertex:
  // a blue component whose only free vertex is v and which has no 3 yet
  // forces v to 3. Returns false on a contradiction.
  bool force_singletons(std::vector<int>& col) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<int, std::pair<int, bool>> state;  // free count, has a 3
      for (Vertex v : vertices) {
        auto& s = state[bcomp[v]];
        if (col[v] == 0) ++s.first;
        if (col[v] == 3) s.second = true;
      }
      for (Vertex v : vertices) {
        const auto& s = state[bcomp[v]];
        if (col[v] != 0 || s.first != 1 || s.second) continue;
        col[v] = 3;
        if (!prop.run(col, {v})) return false;
        changed = true;
        break;
      }
    }
    return true;
  }

  // First non-bridge red edge of the graph whose nodes are the free parts of
  // blue components, in canonical edge order.
  std::optional<Edge> first_non_bridge(const std::vector<int>& col, bool require_min_degree) const {
    const VertexSet free = uncoloured(col);
    std::map<int, int> node;
    for (Vertex v : free) node.try_emplace(bcomp[v], static_cast<int>(node.size()));
    std::vector<Edge> reds;
    for (Vertex v : free)
      for (Vertex u : prop.red(v))
        if (v < u && col[u] == 0) reds.emplace_back(v, u);
    std::sort(reds.begin(), reds.end());
    const int k = static_cast<int>(node.size());
    std::vector<std::vector<std::pair<int, int>>> adj(k);  // node, edge id
    for (int e = 0; e < static_cast<int>(reds.size()); ++e) {
      const int a = node[bcomp[reds[e].first]];
      const int b = node[bcomp[reds[e].second]];
      adj[a].emplace_back(b, e);
      adj[b].emplace_back(a, e);
    }
    if (require_min_degree)
      for (int x = 0; x < k; ++x)
        if (adj[x].size() < 2)
          throw InvariantBreach("contracted blue-component graph has a node of degree below 2");
    std::vector<int> disc(k, -1), low(k, 0);
    std::vector<char> bridge(reds.size(), 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int x, int via) {
      disc[x] = low[x] = timer++;
      for (auto [y, e] : adj[x]) {
        if (e == via) continue;
        if (disc[y] < 0) {
          dfs(y, e);
          low[x] = std::min(low[x], low[y]);
          if (low[y] > disc[x]) bridge[e] = 1;
        } else {
          low[x] = std::min(low[x], disc[y]);
        }
      }
    };
    for (int x = 0; x < k; ++x)
      if (disc[x] < 0) dfs(x, -1);
    for (std::size_t e = 0; e < reds.size(); ++e)
      if (!bridge[e]) return reds[e];
    if (!reds.empty()) return reds.front();
    return std::nullopt;
  }

  // Case where every blue component receives a 3.
  void all_have_three(std::vector<int> col, bool top) {
    if (!force_singletons(col)) return;
    if (uncoloured(col).empty()) {
      record(col);
      return;
    }
    if (!top) ++counters.fallbacks;
    const auto e = first_non_bridge(col, top);
    if (!e) {
      ++counters.fallbacks;
      branch_all(std::move(col));
      return;
    }
    for (int c : {1, 3}) {
      auto next = col;
      next[e->first] = c;
      if (!prop.run(next, {e->first})) continue;
      if (uncoloured(next).empty())
        record(next);
      else
        all_have_three(std::move(next), false);
    }
  }
};

}  // namespace

std::vector<AuxComponent> enumerate_options(const AuxGraph& hs, AuxCounters* counters) {
  AuxCounters local;
  AuxCounters& cnt = counters ? *counters : local;
  const Propagator prop(hs);
  const int n = hs.order();
  std::vector<char> in(n);
  for (int v = 0; v < n; ++v) in[v] = prop.live(v);
  int q = 0;
  const auto bcomp = blue_components(hs, in, &q);

  std::vector<int> comp(n, -1);
  std::vector<AuxComponent> out;
  for (int r = 0; r < n; ++r) {
    if (!in[r] || comp[r] >= 0) continue;
    AuxComponent c;
    std::vector<Vertex> queue{r};
    comp[r] = static_cast<int>(out.size());
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (const VertexSet* nb : {&prop.red(v), &prop.blue(v)})
        for (Vertex u : *nb)
          if (comp[u] < 0) {
            comp[u] = comp[r];
            queue.push_back(u);
          }
    }
    c.vertices = normalized(queue);
    out.push_back(std::move(c));
  }

  for (auto& c : out) {
    std::vector<AuxOption> options;
    ComponentSearch search{hs, prop, c.vertices, bcomp, cnt, options};
    const std::vector<int> blank(hs.colour.begin(), hs.colour.end());

    std::map<int, VertexSet> single, paired;  // B_i' and B_i'' by blue component
    std::map<std::pair<int, int>, int> reds_between;
    for (Vertex v : c.vertices) {
      (prop.red(v).empty() ? single : paired)[bcomp[v]].push_back(v);
      single[bcomp[v]];
      for (Vertex u : prop.red(v))
        if (v < u) ++reds_between[{std::min(bcomp[u], bcomp[v]), std::max(bcomp[u], bcomp[v])}];
    }
    const bool double_red = std::any_of(reds_between.begin(), reds_between.end(),
                                        [](const auto& kv) { return kv.second >= 2; });
    if (double_red) {
      // After Rule 8 this is the 4-vertex piece with two colourings.
      search.branch_all(blank);
    } else {
      for (const auto& [b, bp] : single) {
        auto col = blank;
        std::vector<Vertex> seeds;
        for (Vertex v : paired[b]) {
          col[v] = 1;
          seeds.push_back(v);
        }
        if (!prop.run(col, seeds)) {
          ++cnt.options;
          continue;
        }
        bool complete = true;
        for (Vertex v : c.vertices)
          if (col[v] == 0 && bcomp[v] != b) complete = false;
        if (!complete) {
          ++cnt.fallbacks;
          search.branch_all(col);
          continue;
        }
        for (Vertex v : bp) col[v] = 1;
        search.record(col);
        for (Vertex u : bp) {
          col[u] = 3;
          search.record(col);
          col[u] = 1;
        }
      }
      auto col = blank;
      std::vector<Vertex> seeds;
      for (const auto& [b, bp] : single)
        for (Vertex v : bp) {
          col[v] = 1;
          seeds.push_back(v);
        }
      if (prop.run(col, seeds)) search.all_have_three(std::move(col), true);
    }
    // Keep one witness per attainable weight, lightest first.
    std::stable_sort(options.begin(), options.end(),
                     [](const AuxOption& x, const AuxOption& y) { return x.weight < y.weight; });
    for (auto& o : options)
      if (c.options.empty() || c.options.back().weight != o.weight) c.options.push_back(std::move(o));
  }
  return out;
}

std::optional<std::pair<long long, std::vector<int>>> minimize(const AuxGraph& hs, AuxCounters* counters) {
  std::vector<int> col(hs.colour.begin(), hs.colour.end());
  long long total = hs.ones_weight();
  for (const auto& c : enumerate_options(hs, counters)) {
    if (c.options.empty()) return std::nullopt;
    total += c.options.front().weight;
    for (auto [v, colour] : c.options.front().colours) col[v] = colour;
  }
  return std::make_pair(total, std::move(col));
}

long long TroubleProfile::min() const {
  if (!feasible_) throw std::logic_error("infeasible trouble profile has no minimum");
  long long t = base_ones_;
  for (const auto& p : pieces_) t += p.weights.front();
  return t;
}

long long TroubleProfile::max() const {
  if (!feasible_) throw std::logic_error("infeasible trouble profile has no maximum");
  long long t = base_ones_;
  for (const auto& p : pieces_) t += p.weights.back();
  return t;
}

std::vector<bool> TroubleProfile::attainable() const {
  if (!feasible_) return {};
  std::vector<bool> reach(static_cast<std::size_t>(max() + 1), false);
  reach[base_ones_] = true;
  for (const auto& p : pieces_) {
    std::vector<bool> next(reach.size(), false);
    for (std::size_t s = 0; s < reach.size(); ++s)
      if (reach[s])
        for (long long w : p.weights)
          if (s + w < next.size()) next[s + w] = true;
    reach = std::move(next);
  }
  return reach;
}

Coloring TroubleProfile::realize(long long ones) const {
  if (!feasible_ || ones < 0 || ones > max()) throw std::out_of_range("colour-1 count not attainable");
  const std::size_t k = pieces_.size();
  const std::size_t cap = static_cast<std::size_t>(max() + 1);
  // reach[i][s]: pieces i.. can contribute exactly s.
  std::vector<std::vector<bool>> reach(k + 1, std::vector<bool>(cap, false));
  reach[k][0] = true;
  for (std::size_t i = k; i-- > 0;)
    for (std::size_t s = 0; s < cap; ++s)
      for (long long w : pieces_[i].weights)
        if (static_cast<long long>(s) >= w && reach[i + 1][s - w]) {
          reach[i][s] = true;
          break;
        }
  long long need = ones - base_ones_;
  if (need < 0 || !reach[0][need]) throw std::out_of_range("colour-1 count not attainable");
  Coloring c = base_;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& p = pieces_[i];
    for (std::size_t o = 0; o < p.weights.size(); ++o) {
      if (p.weights[o] > need || !reach[i + 1][need - p.weights[o]]) continue;
      for (auto [v, colour] : p.colours[o]) c[v] = colour;
      need -= p.weights[o];
      break;
    }
  }
  return c;
}

TroubleProfile trouble_profile(const TroublesomeInstance& inst, ColouringMode mode, AuxCounters* counters) {
  const bool semi = mode == ColouringMode::SemiAcyclic;
  TroubleProfile prof;
  AuxGraph h = build_h(inst, semi);
  if (!reduce_h(h, counters)) return prof;
  AuxGraph hs = build_hstar(h);
  if (!reduce_hstar(hs, counters)) return prof;
  if (semi)
    if (auto w = assert_blue_cliques(hs, inst))
      throw InvariantBreach("a blue component of the contracted auxiliary graph is not a clique", *w);
  const auto comps = enumerate_options(hs, counters);
  for (const auto& c : comps)
    if (c.options.empty()) return prof;

  prof.base_.assign(inst.graph.order(), 0);
  for (Vertex v : inst.l2) prof.base_[v] = 2;
  for (int v = 0; v < h.order(); ++v)
    if (h.colour[v] != 0)
      for (Vertex m : h.members[v]) prof.base_[m] = h.colour[v];
  for (int v = 0; v < hs.order(); ++v)
    if (hs.colour[v] != 0)
      for (Vertex m : hs.members[v]) prof.base_[m] = hs.colour[v];
  for (int c : prof.base_) prof.base_ones_ += c == 1;
  for (const auto& c : comps) {
    TroubleProfile::Piece piece;
    for (const auto& o : c.options) {
      piece.weights.push_back(o.weight);
      std::vector<std::pair<Vertex, int>> expanded;
      for (auto [v, colour] : o.colours)
        for (Vertex m : hs.members[v]) expanded.emplace_back(m, colour);
      piece.colours.push_back(std::move(expanded));
    }
    prof.pieces_.push_back(std::move(piece));
  }
  prof.feasible_ = true;
  return prof;
}

TroubleResult t_of(const TroublesomeInstance& inst, ColouringMode mode, AuxCounters* counters) {
  const auto prof = trouble_profile(inst, mode, counters);
  if (!prof.feasible()) return {};
  TroubleResult r;
  r.t = prof.min();
  r.witness = prof.realize(*r.t);
  if (!is_trouble_free(inst, r.witness, mode))
    throw InvariantBreach("minimum colouring of a troublesome instance failed verification");
  return r;
}

}  // namespace nearbip
