#include "nearbip/ifvs.hpp"

#include <array>
#include <chrono>
#include <map>
#include <mutex>

#include "nearbip/detect.hpp"
#include "nearbip/log.hpp"

namespace nearbip {

bool is_ifvs(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return is_forest(remove_vertices(g, s).graph);
}

bool is_ioct(const Graph& g, const VertexSet& s) {
  if (!is_independent(g, s)) return false;
  return bipartition(remove_vertices(g, s).graph).has_value();
}

nlohmann::ordered_json to_json(const SolveResult& r, bool timing) {
  nlohmann::ordered_json j;
  j["verdict"] = r.verdict ? "yes" : "no";
  j["size"] = r.size ? nlohmann::ordered_json(*r.size) : nlohmann::ordered_json(nullptr);
  j["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nlohmann::ordered_json(nullptr);
  const auto& s = r.stats.search;
  nlohmann::ordered_json st;
  st["s_colourings"] = s.s_colourings;
  st["nodes"] = s.nodes;
  st["eliminations"] = s.eliminations;
  st["leaves"] = s.leaves;
  st["dead_ends"] = s.dead_ends;
  st["duplicates"] = s.duplicates;
  st["list_rules"] = std::vector<long long>(s.rules.fired.begin() + 1, s.rules.fired.end());
  st["troublesome"] = r.stats.troublesome;
  st["aux_rules"] = std::vector<long long>(r.stats.aux.fired.begin() + 1, r.stats.aux.fired.end());
  st["aux_options"] = r.stats.aux.options;
  st["aux_fallbacks"] = r.stats.aux.fallbacks;
  if (timing) st["wall_seconds"] = r.stats.wall_seconds;
  j["stats"] = std::move(st);
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

enum class Objective { Min, Max, All };

// Colour-1 counts reachable in one connected component, each with the first
// colouring (component indices) found for it in canonical order.
using SizeTable = std::map<long long, Coloring>;

struct Slot {
  SizeTable table;
  AuxCounters aux;
  long long troublesome = 0;
};

SizeTable component_sizes(const Graph& g, ColouringMode mode, Objective objective, const SolveOptions& options,
                          SolveStats& stats) {
  std::array<Slot, 27> slots;
  const ListAssignment lists = full_lists(g.order());
  auto visit = [&](int branch, const Leaf& leaf) {
    Slot& slot = slots[branch];
    slot.troublesome += 2;
    const auto p1 = trouble_profile(leaf.first, mode, &slot.aux);
    if (!p1.feasible()) return false;
    const auto p2 = trouble_profile(leaf.second, mode, &slot.aux);
    if (!p2.feasible()) return false;
    const long long base = static_cast<long long>(leaf.l1.size());
    std::vector<std::pair<long long, long long>> picks;  // colour-1 counts in first, second
    if (objective == Objective::Min) {
      picks.emplace_back(p1.min(), p2.min());
    } else if (objective == Objective::Max) {
      picks.emplace_back(p1.max(), p2.max());
    } else {
      const auto a1 = p1.attainable();
      const auto a2 = p2.attainable();
      for (std::size_t x = 0; x < a1.size(); ++x)
        for (std::size_t y = 0; y < a2.size(); ++y)
          if (a1[x] && a2[y] && !slot.table.contains(base + static_cast<long long>(x + y)))
            picks.emplace_back(x, y);
    }
    for (auto [x, y] : picks) {
      const long long size = base + x + y;
      if (slot.table.contains(size)) continue;
      Coloring c = assemble(leaf, p1.realize(x), p2.realize(y));
      const bool valid = mode == ColouringMode::SemiAcyclic ? is_semi_acyclic(g, c) : is_total(c) && is_proper(g, c);
      if (!valid) throw InvariantBreach("assembled colouring of a leaf failed verification");
      slot.table.emplace(size, std::move(c));
    }
    return false;
  };
  LsacOptions lo{mode, false, options.parallel};
  enumerate_leaves(g, lists, lo, visit, stats.search);
  SizeTable merged;
  for (auto& slot : slots) {
    stats.aux.add(slot.aux);
    stats.troublesome += slot.troublesome;
    for (auto& [size, c] : slot.table) merged.try_emplace(size, std::move(c));
  }
  return merged;
}

struct Decomposition {
  std::vector<VertexSet> comps;
  std::vector<SizeTable> tables;
};

Decomposition per_component(const Graph& g, ColouringMode mode, Objective objective, const SolveOptions& options,
                            SolveStats& stats) {
  if (options.check_p5) require_p5_free(g);
  Decomposition d;
  for (auto& comp : connected_components(g)) {
    auto sub = induced_subgraph(g, comp);
    d.tables.push_back(component_sizes(sub.graph, mode, objective, options, stats));
    d.comps.push_back(std::move(comp));
    log().debug("component of order {}: {} attainable sizes", sub.graph.order(), d.tables.back().size());
  }
  return d;
}

VertexSet ones_of(const Decomposition& d, const std::vector<const Coloring*>& picks) {
  VertexSet s;
  for (std::size_t i = 0; i < d.comps.size(); ++i)
    for (std::size_t k = 0; k < d.comps[i].size(); ++k)
      if ((*picks[i])[k] == 1) s.push_back(d.comps[i][k]);
  return normalized(std::move(s));
}

SolveResult finish(const Graph& g, ColouringMode mode, VertexSet witness, SolveStats stats) {
  const bool ok = mode == ColouringMode::SemiAcyclic ? is_ifvs(g, witness) : is_ioct(g, witness);
  if (!ok) throw InvariantBreach("reported set failed direct verification", witness);
  SolveResult r;
  r.verdict = true;
  r.size = static_cast<long long>(witness.size());
  r.witness = std::move(witness);
  r.stats = std::move(stats);
  return r;
}

// Extreme total over components: min or max of each table.
SolveResult extreme(const Graph& g, ColouringMode mode, Objective objective, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveStats stats;
  const auto d = per_component(g, mode, objective, options, stats);
  std::vector<const Coloring*> picks;
  for (const auto& t : d.tables) {
    if (t.empty()) {
      SolveResult r;
      r.stats = std::move(stats);
      r.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
      return r;
    }
    picks.push_back(objective == Objective::Max ? &t.rbegin()->second : &t.begin()->second);
  }
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return finish(g, mode, ones_of(d, picks), std::move(stats));
}

SolveResult decision_from(SolveResult r, long long k) {
  if (r.verdict && *r.size > k) {
    r.verdict = false;
    r.size.reset();
    r.witness.reset();
  }
  return r;
}

SolveResult colouring_decision(const Graph& g, ColouringMode mode, const SolveOptions& options) {
  const auto start = Clock::now();
  SolveStats stats;
  LsacOptions lo{mode, options.check_p5, options.parallel};
  const auto c = solve_lsac(g, full_lists(g.order()), lo, &stats.search);
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!c) {
    SolveResult r;
    r.stats = std::move(stats);
    return r;
  }
  return finish(g, mode, colour_class(*c, 1), std::move(stats));
}

}  // namespace

SolveResult is_near_bipartite(const Graph& g, const SolveOptions& options) {
  return colouring_decision(g, ColouringMode::SemiAcyclic, options);
}

SolveResult min_ifvs(const Graph& g, const SolveOptions& options) {
  const auto decision = is_near_bipartite(g, options);
  if (!decision.verdict) return decision;
  // The decision already checked for an induced P5.
  SolveOptions o = options;
  o.check_p5 = false;
  auto r = extreme(g, ColouringMode::SemiAcyclic, Objective::Min, o);
  r.stats.search.add(decision.stats.search);
  r.stats.wall_seconds += decision.stats.wall_seconds;
  return r;
}

SolveResult max_ifvs(const Graph& g, const SolveOptions& options) {
  const auto decision = is_near_bipartite(g, options);
  if (!decision.verdict) return decision;
  SolveOptions o = options;
  o.check_p5 = false;
  auto r = extreme(g, ColouringMode::SemiAcyclic, Objective::Max, o);
  r.stats.search.add(decision.stats.search);
  r.stats.wall_seconds += decision.stats.wall_seconds;
  return r;
}

SolveResult ifvs_decision(const Graph& g, long long k, const SolveOptions& options) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  return decision_from(min_ifvs(g, options), k);
}

SolveResult ifvs_exact_size(const Graph& g, long long k, const SolveOptions& options) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  const auto start = Clock::now();
  const auto decision = is_near_bipartite(g, options);
  if (!decision.verdict) return decision;
  if (k > g.order()) return decision_from(decision, -1);
  SolveOptions o = options;
  o.check_p5 = false;
  SolveStats stats;
  stats.search.add(decision.stats.search);
  const auto d = per_component(g, ColouringMode::SemiAcyclic, Objective::All, o, stats);
  // reach[i][s]: components i.. can contribute exactly s.
  const std::size_t m = d.tables.size();
  std::vector<std::vector<bool>> reach(m + 1, std::vector<bool>(static_cast<std::size_t>(k) + 1, false));
  reach[m][0] = true;
  for (std::size_t i = m; i-- > 0;)
    for (long long s = 0; s <= k; ++s)
      for (const auto& [w, c] : d.tables[i])
        if (w <= s && reach[i + 1][s - w]) {
          reach[i][s] = true;
          break;
        }
  stats.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!reach[0][k]) {
    SolveResult r;
    r.stats = std::move(stats);
    return r;
  }
  std::vector<const Coloring*> picks;
  long long need = k;
  for (std::size_t i = 0; i < m; ++i)
    for (const auto& [w, c] : d.tables[i])
      if (w <= need && reach[i + 1][need - w]) {
        picks.push_back(&c);
        need -= w;
        break;
      }
  return finish(g, ColouringMode::SemiAcyclic, ones_of(d, picks), std::move(stats));
}

SolveResult min_ioct(const Graph& g, const SolveOptions& options) {
  const auto decision = colouring_decision(g, ColouringMode::Proper, options);
  if (!decision.verdict) return decision;
  SolveOptions o = options;
  o.check_p5 = false;
  auto r = extreme(g, ColouringMode::Proper, Objective::Min, o);
  r.stats.search.add(decision.stats.search);
  r.stats.wall_seconds += decision.stats.wall_seconds;
  return r;
}

SolveResult ioct_decision(const Graph& g, long long k, const SolveOptions& options) {
  if (k < 0) throw ContractViolation("k must be non-negative");
  return decision_from(min_ioct(g, options), k);
}

}  // namespace nearbip
