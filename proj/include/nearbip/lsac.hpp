#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nearbip/colouring.hpp"
#include "nearbip/detect.hpp"
#include "nearbip/graph.hpp"
#include "nearbip/trouble_free.hpp"
#include "nearbip/twosat.hpp"

namespace nearbip {

/// Input was required to be P5-free but is not; carries an induced P5.
class NotP5Free : public ContractViolation {
 public:
  explicit NotP5Free(std::vector<Vertex> path);
  const std::vector<Vertex>& witness() const noexcept { return path_; }

 private:
  std::vector<Vertex> path_;
};

/// Two parts that must form a chain graph contain an induced 2P2; the
/// witness is the induced P5 u', u, a_i, v, v' through the dominating vertex.
class ChainViolation : public InvariantBreach {
 public:
  using InvariantBreach::InvariantBreach;
};

struct RuleCounters {
  std::array<long long, 6> fired{};  // by rule number 1..5
  void add(const RuleCounters& o) {
    for (std::size_t i = 0; i < fired.size(); ++i) fired[i] += o.fired[i];
  }
};

enum class RuleOutcome { Unchanged, Changed, No };

/// A single application of list rule `rule` (1..5) at its first match.
/// `c4s` must be the induced C4s of g. Rules 4 and 5 are inert in Proper mode.
RuleOutcome apply_list_rule(const Graph& g, std::span<const Cycle4> c4s, ListAssignment& lists, int rule,
                            ColouringMode mode = ColouringMode::SemiAcyclic);

/// Rules 1..5 to a fixed point. Returns false if the instance is a no-instance.
bool propagate(const Graph& g, std::span<const Cycle4> c4s, ListAssignment& lists,
               ColouringMode mode = ColouringMode::SemiAcyclic, RuleCounters* counters = nullptr);
bool propagate(const Graph& g, ListAssignment& lists, ColouringMode mode = ColouringMode::SemiAcyclic,
               RuleCounters* counters = nullptr);

/// The dominating triple a_1, a_2, a_3 with its colours, and the layer of
/// every other vertex: 1 if adjacent to a_1, else 2 if adjacent to a_2, else 3.
struct DominatingFrame {
  std::array<Vertex, 3> s{};
  std::array<int, 3> colours{};
  std::vector<int> layer;  // 0 on S itself
};

DominatingFrame make_frame(const Graph& g, std::array<Vertex, 3> s, std::array<int, 3> colours);

/// V_i' (layer i, list exactly {1,2,3} minus c_i) split by bipartition into
/// V_i'' (left) and V_i''' (right).
struct LayerParts {
  std::array<VertexSet, 3> prime;
  std::array<VertexSet, 3> left;
  std::array<VertexSet, 3> right;
};

LayerParts layer_parts(const Graph& g, const ListAssignment& lists, const DominatingFrame& frame);

struct BranchState {
  DominatingFrame frame;
  ListAssignment lists;
};

/// The first part pair with edges between them, in the order (1,2), (1,3),
/// (2,3) and within a pair ''x'', ''x''', '''x'', '''x'''.
struct EliminationStep {
  int i = 0;
  int j = 0;
  int colour = 0;  // least colour other than c_i and c_j
  /// Vertices of the layer-i part with a neighbour in the layer-j part, by
  /// non-increasing neighbourhood.
  VertexSet order;
};

/// nullopt when no two distinct V_i', V_j' are adjacent. Throws
/// ChainViolation when the part pair is not a chain graph.
std::optional<EliminationStep> next_elimination_step(const Graph& g, const BranchState& state);

/// The k+1 list assignments "order[t] is the first vertex coloured c'" for
/// t < k, and "none of them is". Not propagated.
std::vector<ListAssignment> elimination_children(const ListAssignment& lists, const EliminationStep& step);

/// An induced C4 whose lists admit a {2,3} colouring, with its two good
/// (colour-1-capable) corners.
struct TrickyC4 {
  Cycle4 cycle{};
  std::array<Vertex, 2> good{};
};

/// Throws InvariantBreach if a tricky C4 is not in strongly tricky form.
std::vector<TrickyC4> classify_strongly_tricky(const Graph& g, std::span<const Cycle4> c4s,
                                               const ListAssignment& lists);

/// A fully eliminated branch: L_1 gets colour 1, L_{2,3} its bipartition
/// colours (left 2, right 3), and the rest splits into two troublesome
/// instances, G[L_2 + L_{1,3}] and G[L_3 + L_{1,2}] with 2 and 3 swapped.
struct Leaf {
  ListAssignment lists;
  Coloring base;
  VertexSet l1;
  TroublesomeInstance first;
  TroublesomeInstance second;
  std::vector<Vertex> first_to_parent;
  std::vector<Vertex> second_to_parent;
};

/// Requires every list to have one or two colours and no edges between
/// different two-colour lists.
Leaf make_leaf(const Graph& g, std::span<const Cycle4> c4s, const ListAssignment& lists, ColouringMode mode);

/// Two variables per l13 vertex (2i for colour 1, 2i+1 for colour 3).
twosat::Instance encode_trouble_free(const TroublesomeInstance& inst,
                                     ColouringMode mode = ColouringMode::SemiAcyclic);

/// Instance colouring (l2 -> 2, l13 -> 1 or 3) or nullopt.
std::optional<Coloring> decide_trouble_free(const TroublesomeInstance& inst,
                                            ColouringMode mode = ColouringMode::SemiAcyclic);

/// Combines the leaf's base colouring with colourings of its two instances.
Coloring assemble(const Leaf& leaf, const Coloring& first, const Coloring& second);

struct LsacStats {
  long long s_colourings = 0;  // dominating-set colourings surviving propagation
  long long nodes = 0;         // branch states visited
  long long eliminations = 0;  // elimination steps branched on
  long long leaves = 0;
  long long dead_ends = 0;     // children rejected by propagation
  long long duplicates = 0;    // states reached twice
  long long rejected = 0;      // assembled colourings failing verification
  RuleCounters rules;
  void add(const LsacStats& o);
};

struct LsacOptions {
  ColouringMode mode = ColouringMode::SemiAcyclic;
  /// Refuse inputs with an induced P5 (throws NotP5Free).
  bool check_p5 = true;
  /// Explore dominating-set colourings concurrently.
  bool parallel = false;
};

/// Called with the index of the dominating-set colouring (0..26) and a leaf;
/// returns true to stop exploring that colouring's subtree. In parallel mode
/// calls for different indices may run concurrently.
using LeafVisitor = std::function<bool(int branch, const Leaf& leaf)>;

/// Visits the leaves of the branch tree of a connected graph in canonical
/// order. Graphs with fewer than three vertices get one leaf per list
/// colouring. A K4 yields no leaves.
void enumerate_leaves(const Graph& g, const ListAssignment& lists, const LsacOptions& options,
                      const LeafVisitor& visit, LsacStats& stats);

/// A list-respecting semi-acyclic (or, in Proper mode, proper) 3-colouring,
/// verified before it is returned, or nullopt.
std::optional<Coloring> solve_lsac(const Graph& g, const ListAssignment& lists, const LsacOptions& options = {},
                                   LsacStats* stats = nullptr);

/// Throws NotP5Free if g has an induced P5.
void require_p5_free(const Graph& g);

}  // namespace nearbip
