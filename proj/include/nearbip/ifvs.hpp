#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "nearbip/graph.hpp"
#include "nearbip/lsac.hpp"
#include "nearbip/trouble_free.hpp"

namespace nearbip {

struct SolveStats {
  LsacStats search;
  AuxCounters aux;
  long long troublesome = 0;  // troublesome instances evaluated
  double wall_seconds = 0;
};

struct SolveResult {
  bool verdict = false;
  std::optional<long long> size;
  std::optional<VertexSet> witness;
  SolveStats stats;
};

/// {verdict, size, witness, stats}. Wall time is included only when
/// `timing` is set, so that default output is reproducible byte for byte.
nlohmann::ordered_json to_json(const SolveResult& r, bool timing = false);

struct SolveOptions {
  /// Refuse inputs with an induced P5 (throws NotP5Free).
  bool check_p5 = true;
  /// Evaluate dominating-set colourings concurrently. The reported size is
  /// unchanged and the witness is still the canonical-first one.
  bool parallel = false;
};

/// Whether g has an independent feedback vertex set; the witness is the
/// colour-1 class of a semi-acyclic 3-colouring.
SolveResult is_near_bipartite(const Graph& g, const SolveOptions& options = {});

SolveResult min_ifvs(const Graph& g, const SolveOptions& options = {});
SolveResult max_ifvs(const Graph& g, const SolveOptions& options = {});
/// Yes iff some independent feedback vertex set has at most k vertices.
SolveResult ifvs_decision(const Graph& g, long long k, const SolveOptions& options = {});
/// Yes iff some independent feedback vertex set has exactly k vertices.
SolveResult ifvs_exact_size(const Graph& g, long long k, const SolveOptions& options = {});

/// Smallest independent S with G - S bipartite; verdict no iff g is not
/// 3-colourable.
SolveResult min_ioct(const Graph& g, const SolveOptions& options = {});
/// Yes iff some independent odd cycle transversal has at most k vertices.
SolveResult ioct_decision(const Graph& g, long long k, const SolveOptions& options = {});

/// Independent and G - S a forest.
bool is_ifvs(const Graph& g, const VertexSet& s);
/// Independent and G - S bipartite.
bool is_ioct(const Graph& g, const VertexSet& s);

}  // namespace nearbip
