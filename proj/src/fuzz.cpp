#include "nearbip/fuzz.hpp"

#include <stdexcept>

#include "nearbip/oracle.hpp"

namespace nearbip {

Problem parse_problem(std::string_view name) {
  if (name == "nb") return Problem::NearBipartite;
  if (name == "ifvs") return Problem::Ifvs;
  if (name == "ioct") return Problem::Ioct;
  throw std::invalid_argument("unknown problem '" + std::string(name) + "' (expected nb, ifvs or ioct)");
}

std::string_view problem_name(Problem p) {
  switch (p) {
    case Problem::NearBipartite: return "nb";
    case Problem::Ifvs: return "ifvs";
    case Problem::Ioct: return "ioct";
  }
  return "?";
}

SolveResult solve_problem(Problem p, const Graph& g, const SolveOptions& options) {
  switch (p) {
    case Problem::NearBipartite: return is_near_bipartite(g, options);
    case Problem::Ifvs: return min_ifvs(g, options);
    case Problem::Ioct: return min_ioct(g, options);
  }
  throw std::logic_error("unhandled problem");
}

SolveResult oracle_problem(Problem p, const Graph& g) {
  const auto r = p == Problem::Ioct ? oracle::brute_min_ioct(g) : oracle::brute_min_ifvs(g);
  SolveResult out;
  if (!r) return out;
  out.verdict = true;
  out.size = r->size;
  out.witness = r->set;
  return out;
}

Graph fuzz_instance(const FuzzConfig& config, int i) {
  Rng rng(config.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(i));
  const int n = rng.between(config.min_n, config.max_n);
  return random_p5free_graph(n, rng.below(~std::uint64_t{0}), config.family);
}

FuzzReport fuzz(const FuzzConfig& config, const SolverFn& solver) {
  if (config.max_n > oracle::kMaxSubsetOrder) throw oracle::GuardExceeded("fuzz: max n exceeds the oracle guard");
  if (config.min_n < 1 || config.min_n > config.max_n) throw std::invalid_argument("fuzz: bad order range");
  FuzzReport report;
  for (int i = 0; i < config.iterations; ++i) {
    const Graph g = fuzz_instance(config, i);
    ++report.iterations;
    const SolveResult expected = oracle_problem(config.problem, g);
    std::string why;
    try {
      const SolveResult got = solver ? solver(g) : solve_problem(config.problem, g);
      if (got.verdict != expected.verdict)
        why = std::string("verdict ") + (got.verdict ? "yes" : "no") + ", oracle " + (expected.verdict ? "yes" : "no");
      else if (config.problem != Problem::NearBipartite && got.verdict && got.size != expected.size)
        why = "size " + std::to_string(got.size.value_or(-1)) + ", oracle " + std::to_string(*expected.size);
    } catch (const std::exception& e) {
      why = std::string("solver threw: ") + e.what();
    }
    if (expected.verdict) ++report.yes;
    if (!why.empty()) {
      ++report.mismatches;
      report.counterexample = g;
      report.detail = "iteration " + std::to_string(i) + ": " + why;
      break;
    }
  }
  return report;
}

}  // namespace nearbip
