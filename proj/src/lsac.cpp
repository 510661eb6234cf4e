#include "nearbip/lsac.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <string>
#include <unordered_set>

#include "nearbip/log.hpp"

namespace nearbip {

NotP5Free::NotP5Free(std::vector<Vertex> path)
    : ContractViolation("input graph is not P5-free"), path_(std::move(path)) {}

void require_p5_free(const Graph& g) {
  if (auto p = find_induced_path(g, 5)) throw NotP5Free(std::move(*p));
}

namespace {

constexpr ColourSet singleton_of(int c) { return colour_bit(c); }

bool bipartite_on(const Graph& g, const std::vector<char>& in) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<Vertex> queue;
  for (int r = 0; r < n; ++r) {
    if (!in[r] || side[r] >= 0) continue;
    side[r] = 0;
    queue.assign(1, r);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex v = queue[h];
      for (Vertex w : g.neighbours(v)) {
        if (!in[w]) continue;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool rule3_holds(const Graph& g, const ListAssignment& lists) {
  std::vector<char> in(g.order());
  for (int c = 1; c <= 3; ++c) {
    for (int v = 0; v < g.order(); ++v) in[v] = !has_colour(lists[v], c);
    if (!bipartite_on(g, in)) return false;
  }
  return true;
}

// Rules 1 and 2 to a fixed point.
bool singleton_closure(const Graph& g, ListAssignment& lists, RuleCounters* counters) {
  std::vector<Vertex> work;
  for (int v = 0; v < g.order(); ++v) {
    if (lists[v] == 0) {
      if (counters) ++counters->fired[2];
      return false;
    }
    if (colour_count(lists[v]) == 1) work.push_back(v);
  }
  while (!work.empty()) {
    const Vertex u = work.back();
    work.pop_back();
    const ColourSet c = lists[u];
    for (Vertex v : g.neighbours(u)) {
      if (!(lists[v] & c)) continue;
      lists[v] &= static_cast<ColourSet>(~c);
      if (counters) ++counters->fired[1];
      if (lists[v] == 0) {
        if (counters) ++counters->fired[2];
        return false;
      }
      if (colour_count(lists[v]) == 1) work.push_back(v);
    }
  }
  return true;
}

int one_capable(const Cycle4& c, const ListAssignment& lists, Vertex* which) {
  int k = 0;
  for (Vertex v : c)
    if (has_colour(lists[v], 1)) {
      ++k;
      *which = v;
    }
  return k;
}

std::string key_of(const ListAssignment& lists) { return {lists.begin(), lists.end()}; }

}  // namespace

RuleOutcome apply_list_rule(const Graph& g, std::span<const Cycle4> c4s, ListAssignment& lists, int rule,
                            ColouringMode mode) {
  const bool semi = mode == ColouringMode::SemiAcyclic;
  switch (rule) {
    case 1:
      for (int u = 0; u < g.order(); ++u) {
        if (colour_count(lists[u]) != 1) continue;
        for (Vertex v : g.neighbours(u))
          if (lists[v] & lists[u]) {
            lists[v] &= static_cast<ColourSet>(~lists[u]);
            return RuleOutcome::Changed;
          }
      }
      return RuleOutcome::Unchanged;
    case 2:
      for (auto l : lists)
        if (l == 0) return RuleOutcome::No;
      return RuleOutcome::Unchanged;
    case 3: return rule3_holds(g, lists) ? RuleOutcome::Unchanged : RuleOutcome::No;
    case 4:
      if (!semi) return RuleOutcome::Unchanged;
      for (const auto& c : c4s) {
        Vertex v;
        if (one_capable(c, lists, &v) == 0) return RuleOutcome::No;
      }
      return RuleOutcome::Unchanged;
    case 5:
      if (!semi) return RuleOutcome::Unchanged;
      for (const auto& c : c4s) {
        Vertex v = -1;
        if (one_capable(c, lists, &v) == 1 && lists[v] != singleton_of(1)) {
          lists[v] = singleton_of(1);
          return RuleOutcome::Changed;
        }
      }
      return RuleOutcome::Unchanged;
    default: throw ContractViolation("list rules are numbered 1..5");
  }
}

bool propagate(const Graph& g, std::span<const Cycle4> c4s, ListAssignment& lists, ColouringMode mode,
               RuleCounters* counters) {
  const bool semi = mode == ColouringMode::SemiAcyclic;
  while (true) {
    if (!singleton_closure(g, lists, counters)) return false;
    if (!rule3_holds(g, lists)) {
      if (counters) ++counters->fired[3];
      return false;
    }
    if (!semi) return true;
    bool changed = false;
    for (const auto& c : c4s) {
      Vertex v = -1;
      const int k = one_capable(c, lists, &v);
      if (k == 0) {
        if (counters) ++counters->fired[4];
        return false;
      }
      // Setting v to {1} keeps every other cycle's count unchanged, so all
      // matches of this pass are valid applications.
      if (k == 1 && lists[v] != singleton_of(1)) {
        lists[v] = singleton_of(1);
        if (counters) ++counters->fired[5];
        changed = true;
      }
    }
    if (!changed) return true;
  }
}

bool propagate(const Graph& g, ListAssignment& lists, ColouringMode mode, RuleCounters* counters) {
  std::vector<Cycle4> c4s;
  if (mode == ColouringMode::SemiAcyclic) c4s = enumerate_induced_c4(g);
  return propagate(g, c4s, lists, mode, counters);
}

DominatingFrame make_frame(const Graph& g, std::array<Vertex, 3> s, std::array<int, 3> colours) {
  DominatingFrame f{s, colours, std::vector<int>(g.order(), 3)};
  for (Vertex a : s) f.layer[a] = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (f.layer[v] == 0) continue;
    if (g.adjacent(v, s[0]))
      f.layer[v] = 1;
    else if (g.adjacent(v, s[1]))
      f.layer[v] = 2;
  }
  return f;
}

LayerParts layer_parts(const Graph& g, const ListAssignment& lists, const DominatingFrame& frame) {
  LayerParts p;
  for (int v = 0; v < g.order(); ++v) {
    const int i = frame.layer[v];
    if (i == 0) continue;
    if (lists[v] == static_cast<ColourSet>(kAllColours & ~colour_bit(frame.colours[i - 1])))
      p.prime[i - 1].push_back(v);
  }
  for (int i = 0; i < 3; ++i) {
    auto bp = bipartition(g, p.prime[i]);
    if (!bp) throw InvariantBreach("layer part V'_" + std::to_string(i + 1) + " is not bipartite", p.prime[i]);
    p.left[i] = std::move(bp->left);
    p.right[i] = std::move(bp->right);
  }
  return p;
}

std::optional<EliminationStep> next_elimination_step(const Graph& g, const BranchState& state) {
  const LayerParts parts = layer_parts(g, state.lists, state.frame);
  static constexpr std::pair<int, int> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    const VertexSet* firsts[] = {&parts.left[i], &parts.right[i]};
    const VertexSet* seconds[] = {&parts.left[j], &parts.right[j]};
    for (const VertexSet* a : firsts) {
      for (const VertexSet* b : seconds) {
        if (a->empty() || b->empty()) continue;
        const Bitset bmask = g.to_bits(*b);
        std::vector<std::pair<Vertex, Bitset>> rows;
        for (Vertex u : *a) {
          Bitset nb = g.neighbour_bits(u) & bmask;
          if (nb.any()) rows.emplace_back(u, std::move(nb));
        }
        if (rows.empty()) continue;
        std::stable_sort(rows.begin(), rows.end(),
                         [](const auto& x, const auto& y) { return x.second.count() > y.second.count(); });
        for (std::size_t t = 0; t + 1 < rows.size(); ++t) {
          if (rows[t + 1].second.subset_of(rows[t].second)) continue;
          const Vertex u = rows[t].first;
          const Vertex v = rows[t + 1].first;
          const Vertex up = (rows[t].second - rows[t + 1].second).first();
          const Vertex vp = (rows[t + 1].second - rows[t].second).first();
          throw ChainViolation("edges between layer parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                   " contain an induced 2P2",
                               {up, u, state.frame.s[i], v, vp});
        }
        EliminationStep step;
        step.i = i + 1;
        step.j = j + 1;
        const ColourSet rest = kAllColours & ~colour_bit(state.frame.colours[i]) & ~colour_bit(state.frame.colours[j]);
        step.colour = least_colour(rest);
        for (auto& r : rows) step.order.push_back(r.first);
        return step;
      }
    }
  }
  return std::nullopt;
}

std::vector<ListAssignment> elimination_children(const ListAssignment& lists, const EliminationStep& step) {
  const ColourSet c = colour_bit(step.colour);
  std::vector<ListAssignment> out;
  out.reserve(step.order.size() + 1);
  ListAssignment avoid = lists;
  for (Vertex u : step.order) {
    ListAssignment child = avoid;
    child[u] = c;
    out.push_back(std::move(child));
    avoid[u] &= static_cast<ColourSet>(~c);
  }
  out.push_back(std::move(avoid));
  return out;
}

std::vector<TrickyC4> classify_strongly_tricky(const Graph& g, std::span<const Cycle4> c4s,
                                               const ListAssignment& lists) {
  (void)g;
  std::vector<TrickyC4> out;
  const ColourSet p12 = colour_bit(1) | colour_bit(2);
  const ColourSet p13 = colour_bit(1) | colour_bit(3);
  for (const auto& c : c4s) {
    auto fits = [&](int first) {
      for (int k = 0; k < 4; ++k)
        if (!has_colour(lists[c[k]], k % 2 == 0 ? first : 5 - first)) return false;
      return true;
    };
    if (!fits(2) && !fits(3)) continue;
    std::vector<int> good;
    for (int k = 0; k < 4; ++k)
      if (has_colour(lists[c[k]], 1)) good.push_back(k);
    bool strong = good.size() == 2 && good[1] - good[0] == 2;
    if (strong) {
      const ColourSet gl = lists[c[good[0]]];
      const ColourSet other = gl == p12 ? colour_bit(3) : gl == p13 ? colour_bit(2) : 0;
      const int o = good[0] == 0 ? 1 : 0;
      strong = lists[c[good[1]]] == gl && other != 0 && lists[c[o]] == other && lists[c[o + 2]] == other;
    }
    if (!strong)
      throw InvariantBreach("tricky induced C4 is not strongly tricky", std::vector<Vertex>(c.begin(), c.end()));
    out.push_back({c, {c[good[0]], c[good[1]]}});
  }
  return out;
}

Leaf make_leaf(const Graph& g, std::span<const Cycle4> c4s, const ListAssignment& lists, ColouringMode mode) {
  const int n = g.order();
  const ColourSet p12 = colour_bit(1) | colour_bit(2);
  const ColourSet p13 = colour_bit(1) | colour_bit(3);
  const ColourSet p23 = colour_bit(2) | colour_bit(3);
  Leaf leaf;
  leaf.lists = lists;
  leaf.base.assign(n, 0);
  VertexSet l2, l3, l12, l13, l23;
  for (int v = 0; v < n; ++v) {
    const ColourSet l = lists[v];
    if (l == colour_bit(1)) {
      leaf.l1.push_back(v);
      leaf.base[v] = 1;
    } else if (l == colour_bit(2)) {
      l2.push_back(v);
    } else if (l == colour_bit(3)) {
      l3.push_back(v);
    } else if (l == p12) {
      l12.push_back(v);
    } else if (l == p13) {
      l13.push_back(v);
    } else if (l == p23) {
      l23.push_back(v);
    } else {
      throw InvariantBreach("leaf vertex " + std::to_string(v) + " has list " + format_colour_set(l), {v});
    }
  }
  for (auto [u, v] : g.edges()) {
    const ColourSet a = lists[u];
    const ColourSet b = lists[v];
    if (colour_count(a) == 2 && colour_count(b) == 2 && a != b)
      throw InvariantBreach("leaf has an edge between different two-colour lists", {u, v});
  }
  auto bp = bipartition(g, l23);
  if (!bp) throw InvariantBreach("vertices with list {2,3} are not bipartite", l23);
  for (Vertex v : bp->left) leaf.base[v] = 2;
  for (Vertex v : bp->right) leaf.base[v] = 3;
  if (mode == ColouringMode::SemiAcyclic) classify_strongly_tricky(g, c4s, lists);

  auto build = [&](const VertexSet& singles, const VertexSet& pairs, TroublesomeInstance& inst,
                   std::vector<Vertex>& to_parent) {
    VertexSet all = singles;
    all.insert(all.end(), pairs.begin(), pairs.end());
    std::sort(all.begin(), all.end());
    auto sub = induced_subgraph(g, all);
    std::vector<int> local(n, -1);
    for (std::size_t k = 0; k < sub.to_parent.size(); ++k) local[sub.to_parent[k]] = static_cast<int>(k);
    for (Vertex v : singles) inst.l2.push_back(local[v]);
    for (Vertex v : pairs) inst.l13.push_back(local[v]);
    inst.graph = std::move(sub.graph);
    to_parent = std::move(sub.to_parent);
  };
  build(l2, l13, leaf.first, leaf.first_to_parent);
  build(l3, l12, leaf.second, leaf.second_to_parent);
  return leaf;
}

twosat::Instance encode_trouble_free(const TroublesomeInstance& inst, ColouringMode mode) {
  validate(inst);
  std::vector<int> pos(inst.graph.order(), -1);
  for (std::size_t k = 0; k < inst.l13.size(); ++k) pos[inst.l13[k]] = static_cast<int>(k);
  twosat::Instance sat;
  sat.var_count = 2 * static_cast<int>(inst.l13.size());
  auto one = [](int k) { return 2 * k; };
  auto three = [](int k) { return 2 * k + 1; };
  for (std::size_t k = 0; k < inst.l13.size(); ++k) {
    const int i = static_cast<int>(k);
    sat.add(twosat::pos(one(i)), twosat::pos(three(i)));
    sat.add(twosat::neg(one(i)), twosat::neg(three(i)));
  }
  for (auto [u, v] : inst.graph.edges()) {
    if (pos[u] < 0 || pos[v] < 0) continue;
    sat.add(twosat::neg(one(pos[u])), twosat::neg(one(pos[v])));
    sat.add(twosat::neg(three(pos[u])), twosat::neg(three(pos[v])));
  }
  if (mode == ColouringMode::SemiAcyclic)
    for (auto [u, v] : strongly_tricky_pairs(inst)) sat.add(twosat::pos(one(pos[u])), twosat::pos(one(pos[v])));
  return sat;
}

std::optional<Coloring> decide_trouble_free(const TroublesomeInstance& inst, ColouringMode mode) {
  const auto sat = encode_trouble_free(inst, mode);
  const auto values = twosat::solve(sat);
  if (!values) return std::nullopt;
  Coloring c(inst.graph.order(), 0);
  for (Vertex v : inst.l2) c[v] = 2;
  for (std::size_t k = 0; k < inst.l13.size(); ++k) c[inst.l13[k]] = (*values)[2 * k] ? 1 : 3;
  return c;
}

Coloring assemble(const Leaf& leaf, const Coloring& first, const Coloring& second) {
  Coloring c = leaf.base;
  for (std::size_t k = 0; k < first.size(); ++k) c[leaf.first_to_parent[k]] = first[k];
  static constexpr int swap23[] = {0, 1, 3, 2};
  for (std::size_t k = 0; k < second.size(); ++k) c[leaf.second_to_parent[k]] = swap23[second[k]];
  return c;
}

void LsacStats::add(const LsacStats& o) {
  s_colourings += o.s_colourings;
  nodes += o.nodes;
  eliminations += o.eliminations;
  leaves += o.leaves;
  dead_ends += o.dead_ends;
  duplicates += o.duplicates;
  rejected += o.rejected;
  rules.add(o.rules);
}

namespace {

class BranchExplorer {
 public:
  BranchExplorer(const Graph& g, std::span<const Cycle4> c4s, ColouringMode mode, int branch, const LeafVisitor& visit,
                 const std::atomic<int>& cutoff, LsacStats& stats)
      : g_(g), c4s_(c4s), mode_(mode), branch_(branch), visit_(visit), cutoff_(cutoff), stats_(stats) {}

  // Returns true if the visitor asked to stop.
  bool run(BranchState state) {
    explore(state);
    return stopped_;
  }

 private:
  void explore(const BranchState& state) {
    if (stopped_ || cutoff_.load(std::memory_order_relaxed) < branch_) return;
    if (!seen_.insert(key_of(state.lists)).second) {
      ++stats_.duplicates;
      return;
    }
    ++stats_.nodes;
    auto step = next_elimination_step(g_, state);
    if (!step) {
      ++stats_.leaves;
      if (visit_(branch_, make_leaf(g_, c4s_, state.lists, mode_))) stopped_ = true;
      return;
    }
    ++stats_.eliminations;
    if (log().should_log(spdlog::level::trace))
      log().trace("branch {}: eliminate parts {}x{} colour {} over {} vertices", branch_, step->i, step->j,
                  step->colour, step->order.size());
    for (auto& child : elimination_children(state.lists, *step)) {
      if (!propagate(g_, c4s_, child, mode_, &stats_.rules)) {
        ++stats_.dead_ends;
        continue;
      }
      explore(BranchState{state.frame, std::move(child)});
      if (stopped_) return;
    }
  }

  const Graph& g_;
  std::span<const Cycle4> c4s_;
  ColouringMode mode_;
  int branch_;
  const LeafVisitor& visit_;
  const std::atomic<int>& cutoff_;
  LsacStats& stats_;
  std::unordered_set<std::string> seen_;
  bool stopped_ = false;
};

void lower_to(std::atomic<int>& a, int v) {
  int cur = a.load();
  while (v < cur && !a.compare_exchange_weak(cur, v)) {
  }
}

void enumerate_small(const Graph& g, const ListAssignment& lists, ColouringMode mode, const LeafVisitor& visit,
                     LsacStats& stats) {
  const int n = g.order();
  int index = 0;
  std::vector<int> c(n, 1);
  auto rec = [&](auto&& self, int v) -> bool {
    if (v == n) {
      ListAssignment l(n);
      for (int k = 0; k < n; ++k) l[k] = colour_bit(c[k]);
      const int branch = index++;
      if (!propagate(g, {}, l, mode, &stats.rules)) {
        ++stats.dead_ends;
        return false;
      }
      ++stats.s_colourings;
      ++stats.nodes;
      ++stats.leaves;
      return visit(branch, make_leaf(g, {}, l, mode));
    }
    for (int col = 1; col <= 3; ++col) {
      if (!has_colour(lists[v], col)) continue;
      c[v] = col;
      if (self(self, v + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

void enumerate_leaves(const Graph& g, const ListAssignment& lists, const LsacOptions& options,
                      const LeafVisitor& visit, LsacStats& stats) {
  const int n = g.order();
  if (static_cast<int>(lists.size()) != n) throw ContractViolation("list assignment size differs from vertex count");
  if (n == 0) return;
  if (n < 3) {
    enumerate_small(g, lists, options.mode, visit, stats);
    return;
  }
  if (!is_connected(g)) throw ContractViolation("enumerate_leaves needs a connected graph");
  if (contains_k4(g)) return;
  auto dom = dominating_clique_or_p3(g);
  if (!dom) {
    if (auto p = find_induced_path(g, 5)) throw NotP5Free(std::move(*p));
    throw InvariantBreach("no dominating clique or induced P3 in a P5-free graph");
  }
  std::array<Vertex, 3> s{};
  {
    VertexSet picked = *dom;
    for (Vertex v = 0; picked.size() < 3; ++v)
      if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    std::copy(picked.begin(), picked.end(), s.begin());
  }
  std::vector<Cycle4> c4s;
  if (options.mode == ColouringMode::SemiAcyclic) c4s = enumerate_induced_c4(g);
  log().debug("component n={} dominating set {{{},{},{}}}, {} induced C4s", n, s[0], s[1], s[2], c4s.size());

  std::atomic<int> cutoff{27};
  std::array<LsacStats, 27> branch_stats{};
  auto run_branch = [&](int idx) {
    const std::array<int, 3> colours{idx / 9 + 1, idx / 3 % 3 + 1, idx % 3 + 1};
    LsacStats& st = branch_stats[idx];
    ListAssignment l = lists;
    for (int k = 0; k < 3; ++k) {
      if (!has_colour(l[s[k]], colours[k])) return;
      l[s[k]] = colour_bit(colours[k]);
    }
    if (!propagate(g, c4s, l, options.mode, &st.rules)) {
      ++st.dead_ends;
      return;
    }
    ++st.s_colourings;
    BranchExplorer explorer(g, c4s, options.mode, idx, visit, cutoff, st);
    if (explorer.run(BranchState{make_frame(g, s, colours), std::move(l)})) lower_to(cutoff, idx);
  };

  if (options.parallel) {
    std::vector<std::future<void>> tasks;
    for (int idx = 0; idx < 27; ++idx) tasks.push_back(std::async(std::launch::async, run_branch, idx));
    for (auto& t : tasks) t.get();
  } else {
    for (int idx = 0; idx < 27 && idx <= cutoff.load(); ++idx) run_branch(idx);
  }
  // Branches past the final cutoff may have been cut short at a timing
  // dependent point; the ones up to it ran exactly as in sequential mode.
  const int last = std::min(cutoff.load(), 26);
  for (int idx = 0; idx <= last; ++idx) stats.add(branch_stats[idx]);
}

std::optional<Coloring> solve_lsac(const Graph& g, const ListAssignment& lists, const LsacOptions& options,
                                   LsacStats* stats) {
  const int n = g.order();
  if (static_cast<int>(lists.size()) != n) throw ContractViolation("list assignment size differs from vertex count");
  if (options.check_p5) require_p5_free(g);
  LsacStats local;
  Coloring result(n, 0);
  bool ok = true;
  for (const auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    ListAssignment sl(comp.size());
    for (std::size_t k = 0; k < comp.size(); ++k) sl[k] = lists[comp[k]];
    std::array<std::optional<Coloring>, 27> found;
    std::array<long long, 27> rejected{};
    auto visit = [&](int branch, const Leaf& leaf) {
      auto a = decide_trouble_free(leaf.first, options.mode);
      if (!a) return false;
      auto b = decide_trouble_free(leaf.second, options.mode);
      if (!b) return false;
      Coloring c = assemble(leaf, *a, *b);
      const bool valid = respects_lists(sl, c) && (options.mode == ColouringMode::SemiAcyclic
                                                       ? is_semi_acyclic(sub.graph, c)
                                                       : is_total(c) && is_proper(sub.graph, c));
      if (!valid) {
        ++rejected[branch];
        return false;
      }
      found[branch] = std::move(c);
      return true;
    };
    enumerate_leaves(sub.graph, sl, options, visit, local);
    const auto hit = std::find_if(found.begin(), found.end(), [](const auto& f) { return f.has_value(); });
    const auto upto = hit == found.end() ? found.size() : static_cast<std::size_t>(hit - found.begin()) + 1;
    for (std::size_t k = 0; k < upto; ++k) local.rejected += rejected[k];
    if (hit == found.end()) {
      ok = false;
      break;
    }
    for (std::size_t k = 0; k < comp.size(); ++k) result[comp[k]] = (**hit)[k];
  }
  if (stats) stats->add(local);
  if (!ok) return std::nullopt;
  return result;
}

}  // namespace nearbip
