#include "nearbip/twosat.hpp"

#include <stdexcept>

namespace nearbip::twosat {

namespace {

// Literal node: 2*var for x, 2*var+1 for not x.
int node(Literal l) { return 2 * l.var + (l.positive ? 0 : 1); }

// Iterative Tarjan. Components are numbered in reverse topological order of
// the condensation (sinks first).
std::vector<int> tarjan(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<std::pair<int, std::size_t>> call;
  int counter = 0;
  int comps = 0;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < adj[v].size()) {
        const int w = adj[v][edge++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, 0);
        } else if (comp[w] < 0) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          comp[w] = comps;
        } while (w != v);
        ++comps;
      }
      const int finished = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[finished]);
    }
  }
  return comp;
}

}  // namespace

std::optional<Assignment> solve(const Instance& inst) {
  const int nodes = 2 * inst.var_count;
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : inst.clauses) {
    if (a.var < 0 || a.var >= inst.var_count || b.var < 0 || b.var >= inst.var_count)
      throw std::invalid_argument("2-SAT clause references an undeclared variable");
    // (a or b): not a -> b, not b -> a
    adj[node(!a)].push_back(node(b));
    adj[node(!b)].push_back(node(a));
  }
  const auto comp = tarjan(adj);
  Assignment values(inst.var_count);
  for (int v = 0; v < inst.var_count; ++v) {
    const int t = comp[2 * v];
    const int f = comp[2 * v + 1];
    if (t == f) return std::nullopt;
    // the literal whose component comes later in topological order is true
    values[v] = t < f;
  }
  return values;
}

bool satisfies(const Instance& inst, const Assignment& values) {
  auto holds = [&](Literal l) { return values.at(l.var) == l.positive; };
  for (auto [a, b] : inst.clauses)
    if (!holds(a) && !holds(b)) return false;
  return true;
}

std::string to_dimacs(const Instance& inst) {
  std::string out = "p cnf " + std::to_string(inst.var_count) + " " + std::to_string(inst.clauses.size()) + "\n";
  auto lit = [](Literal l) { return std::to_string(l.positive ? l.var + 1 : -(l.var + 1)); };
  for (auto [a, b] : inst.clauses) out += a == b ? lit(a) + " 0\n" : lit(a) + " " + lit(b) + " 0\n";
  return out;
}

}  // namespace nearbip::twosat
