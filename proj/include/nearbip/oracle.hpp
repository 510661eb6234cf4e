#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

#include "nearbip/colouring.hpp"
#include "nearbip/graph.hpp"
#include "nearbip/trouble_free.hpp"

// Exhaustive reference implementations for testing. Every enumeration has a
// fixed order so the reported witness is stable: vertex subsets by size,
// then lexicographically; colourings lexicographically by vertex index.
namespace nearbip::oracle {

/// An input exceeds the size the enumeration is allowed to handle.
class GuardExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline constexpr int kMaxSubsetOrder = 22;
inline constexpr double kMaxListProduct = 1e7;
inline constexpr int kMaxHamiltonOrder = 20;

struct SetResult {
  int size = 0;
  VertexSet set;
};

/// Smallest independent S with G - S a forest (lexicographically least among
/// the smallest), or nullopt if there is none.
std::optional<SetResult> brute_min_ifvs(const Graph& g);
/// Largest independent S with G - S a forest.
std::optional<SetResult> brute_max_ifvs(const Graph& g);
/// Independent S of exactly k vertices with G - S a forest.
std::optional<SetResult> brute_ifvs_of_size(const Graph& g, int k);
/// Smallest independent S with G - S bipartite.
std::optional<SetResult> brute_min_ioct(const Graph& g);
/// Smallest S (not necessarily independent) with G - S a forest.
SetResult brute_min_fvs(const Graph& g);
/// Every minimum feedback vertex set, in enumeration order.
std::vector<VertexSet> brute_all_min_fvs(const Graph& g);

/// First list-respecting colouring, in lexicographic order, that is proper
/// and (in SemiAcyclic mode) has a forest on colours 2 and 3.
std::optional<Coloring> brute_lsac(const Graph& g, const ListAssignment& lists,
                                   ColouringMode mode = ColouringMode::SemiAcyclic);

/// Every such colouring, in lexicographic order.
std::vector<Coloring> brute_all_lsac(const Graph& g, const ListAssignment& lists,
                                     ColouringMode mode = ColouringMode::SemiAcyclic);

/// Fewest colour-1 vertices over trouble-free colourings of the instance.
std::optional<std::pair<long long, Coloring>> brute_trouble_free(const TroublesomeInstance& inst,
                                                                 ColouringMode mode = ColouringMode::SemiAcyclic);

/// Every colour-1 count attained by a trouble-free colouring.
std::vector<bool> brute_trouble_free_counts(const TroublesomeInstance& inst,
                                            ColouringMode mode = ColouringMode::SemiAcyclic);

/// Whether g has a Hamilton cycle using the edge e.
bool brute_hamilton_through_edge(const Graph& g, Edge e);

/// Satisfiability of a CNF over `var_count` variables; literals are +v / -v
/// with v starting at 1.
bool brute_sat(int var_count, const std::vector<std::vector<int>>& clauses);

}  // namespace nearbip::oracle
