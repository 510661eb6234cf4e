#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nearbip::twosat {

struct Literal {
  int var = 0;
  bool positive = true;

  Literal operator!() const { return {var, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal pos(int var) { return {var, true}; }
inline Literal neg(int var) { return {var, false}; }

/// A unit clause is written (l, l). Clauses may repeat.
struct Instance {
  int var_count = 0;
  std::vector<std::pair<Literal, Literal>> clauses;

  void add(Literal a, Literal b) { clauses.emplace_back(a, b); }
};

using Assignment = std::vector<bool>;

/// Implication-graph SCC decision procedure, linear in the instance size.
/// Deterministic: the same instance always yields the same assignment.
std::optional<Assignment> solve(const Instance& inst);

bool satisfies(const Instance& inst, const Assignment& values);

/// DIMACS CNF rendering for troubleshooting (variables are 1-based there).
std::string to_dimacs(const Instance& inst);

}  // namespace nearbip::twosat
