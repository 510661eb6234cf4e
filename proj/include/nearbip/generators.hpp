#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nearbip/graph.hpp"

namespace nearbip {

/// Seeded random source with platform-independent bounded draws
/// (std::uniform_*_distribution output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph cube_graph();
Graph petersen_graph();
/// Triangular prism C3 x K2.
Graph prism_graph();
/// The rook's graph K_r x K_r.
Graph rook_graph(int r);

/// Named small graphs: path<N>, cycle<N>, complete<N>, star<N>, cube|q3,
/// petersen, prism, k33, claw, rook3. Throws std::invalid_argument.
Graph named_graph(std::string_view name);

/// G(n, p); deterministic for a fixed seed.
Graph random_graph(int n, double p, std::uint64_t seed);

enum class P5FreeFamily { Any, Cograph, Split, Multipartite, Growth, Rejection, PerturbedCograph };

P5FreeFamily parse_family(std::string_view name);
std::string_view family_name(P5FreeFamily f);

Graph random_cograph(int n, Rng& rng, double join_probability);
Graph random_split_graph(int n, Rng& rng, int max_clique);

/// Random P5-free graph drawn from the chosen constructive family (or a
/// seeded choice of family for Any). The result is re-verified P5-free.
/// Throws GenerationError if the sampling budget runs out.
Graph random_p5free_graph(int n, std::uint64_t seed, P5FreeFamily family = P5FreeFamily::Any);

}  // namespace nearbip
