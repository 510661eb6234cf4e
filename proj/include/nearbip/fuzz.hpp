#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "nearbip/generators.hpp"
#include "nearbip/graph.hpp"
#include "nearbip/ifvs.hpp"

namespace nearbip {

enum class Problem { NearBipartite, Ifvs, Ioct };

/// "nb", "ifvs" or "ioct"; throws std::invalid_argument.
Problem parse_problem(std::string_view name);
std::string_view problem_name(Problem p);

/// The default solver for a problem: is_near_bipartite, min_ifvs or min_ioct.
SolveResult solve_problem(Problem p, const Graph& g, const SolveOptions& options = {});

/// Oracle answer in the same shape: verdict, and the minimum size for ifvs
/// and ioct.
SolveResult oracle_problem(Problem p, const Graph& g);

struct FuzzConfig {
  Problem problem = Problem::Ifvs;
  int iterations = 100;
  int min_n = 3;
  int max_n = 12;
  std::uint64_t seed = 1;
  P5FreeFamily family = P5FreeFamily::Any;
};

struct FuzzReport {
  int iterations = 0;
  int yes = 0;
  int mismatches = 0;
  /// First mismatching instance and a one-line description.
  std::optional<Graph> counterexample;
  std::string detail;
};

/// The graph used in iteration `i`; depends only on (config, i).
Graph fuzz_instance(const FuzzConfig& config, int i);

using SolverFn = std::function<SolveResult(const Graph&)>;

/// Compares `solver` (default: solve_problem) with the oracle on
/// config.iterations random P5-free graphs, stopping at the first mismatch.
/// An exception from the solver counts as a mismatch.
FuzzReport fuzz(const FuzzConfig& config, const SolverFn& solver = {});

}  // namespace nearbip
