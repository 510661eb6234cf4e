#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nearbip/colouring.hpp"
#include "nearbip/graph.hpp"

namespace nearbip {

/// Graph whose vertices have list {2} (l2) or {1,3} (l13); l2 is independent
/// and l13 induces a bipartite graph.
struct TroublesomeInstance {
  Graph graph;
  VertexSet l2;
  VertexSet l13;
};

/// Throws ContractViolation naming the broken condition.
void validate(const TroublesomeInstance& inst);

/// Non-adjacent l13 pairs (u < v) with at least two common l2 neighbours,
/// i.e. the colour-1-capable corners of the strongly tricky induced C4s.
std::vector<Edge> strongly_tricky_pairs(const TroublesomeInstance& inst);

/// List-respecting, proper, and no strongly tricky C4 avoids colour 1.
bool is_trouble_free(const TroublesomeInstance& inst, const Coloring& c);

/// Proper mode drops the strongly tricky condition.
bool is_trouble_free(const TroublesomeInstance& inst, const Coloring& c, ColouringMode mode);

enum class EdgeLabel : std::uint8_t { None, Red, Blue };

/// Vertex-weighted graph with red/blue edges. Colours are 0 (free), 1 or 3.
/// Rule 7 only clears `alive`; a deleted vertex keeps its colour so that the
/// final assignment can be read back.
struct AuxGraph {
  std::vector<int> weight;
  std::vector<int> colour;
  std::vector<char> alive;
  std::vector<std::vector<EdgeLabel>> label;
  /// Instance vertices represented by each aux vertex.
  std::vector<VertexSet> members;
  /// Red component index and side (0 for X, 1 for Y).
  std::vector<int> red_comp;
  std::vector<int> side;

  explicit AuxGraph(int n = 0);
  int order() const { return static_cast<int>(weight.size()); }
  void set_edge(Vertex u, Vertex v, EdgeLabel l) { label[u][v] = label[v][u] = l; }
  /// Alive neighbours along edges labelled `l`.
  VertexSet neighbours(Vertex v, EdgeLabel l) const;
  VertexSet alive_vertices() const;
  /// Weight of vertices coloured 1, alive or not.
  long long ones_weight() const;
  /// Labelled edge list in DOT syntax, for inspection.
  std::string to_dot() const;
};

/// Vertex i of the result stands for inst.l13[i]. Red edges are the edges of
/// G[l13]; blue edges join strongly tricky pairs (omitted when `blue` is
/// false). Red components and sides are assigned by BFS from the lowest index.
AuxGraph build_h(const TroublesomeInstance& inst, bool blue = true);

/// Recomputes red_comp/side from the red edges among alive vertices.
void assign_red_sides(AuxGraph& a);

enum class AuxOutcome { Unchanged, Changed, No };

struct AuxCounters {
  std::array<long long, 9> fired{};  // by rule number
  long long options = 0;             // candidate colourings evaluated
  long long fallbacks = 0;           // branchings beyond the two non-bridge trials
  void add(const AuxCounters& o);
};

/// One application of reduction rule `rule` (1..8) at its first match in
/// canonical order.
AuxOutcome apply_aux_rule(AuxGraph& a, int rule, AuxCounters* counters = nullptr);

/// Rules 1..7 to a fixed point, restarting at Rule 1 after every change.
/// Returns false on a contradiction.
bool reduce_h(AuxGraph& h, AuxCounters* counters = nullptr);

/// Contracts every red component of the alive part of h into x (and y when
/// the component has an edge) with weights |X| and |Y|.
AuxGraph build_hstar(const AuxGraph& h);

/// Rules 1..8 on a contracted graph. Rule 3 here fires on a vertex
/// blue-adjacent to both x_j and y_j, which covers distinct original vertices.
bool reduce_hstar(AuxGraph& hs, AuxCounters* counters = nullptr);

/// nullopt if every blue component of hs is a clique; otherwise an induced
/// P5 of inst.graph (instance indices) explaining the failure, or an empty
/// vector if none could be reconstructed.
std::optional<std::vector<Vertex>> assert_blue_cliques(const AuxGraph& hs, const TroublesomeInstance& inst);

/// One feasible colouring of a connected piece of the contracted graph.
struct AuxOption {
  long long weight = 0;
  std::vector<std::pair<Vertex, int>> colours;  // aux vertex, colour
};

struct AuxComponent {
  VertexSet vertices;
  std::vector<AuxOption> options;
};

/// Every feasible colouring weight of each free component of a reduced
/// contracted graph, with a witness per option. An empty option list for a
/// component means no feasible colouring exists.
std::vector<AuxComponent> enumerate_options(const AuxGraph& hs, AuxCounters* counters = nullptr);

/// Minimum weight of a feasible completion of a reduced contracted graph and
/// the colours realising it, or nullopt.
std::optional<std::pair<long long, std::vector<int>>> minimize(const AuxGraph& hs, AuxCounters* counters = nullptr);

/// Colour-1 counts attainable by trouble-free colourings of an instance.
class TroubleProfile {
 public:
  bool feasible() const { return feasible_; }
  long long min() const;
  long long max() const;
  /// attainable()[k] is true iff some trouble-free colouring uses colour 1 on
  /// exactly k vertices.
  std::vector<bool> attainable() const;
  /// Trouble-free colouring of the instance with exactly `ones` colour-1
  /// vertices. Throws std::out_of_range if that count is not attainable.
  Coloring realize(long long ones) const;

 private:
  friend TroubleProfile trouble_profile(const TroublesomeInstance&, ColouringMode, AuxCounters*);
  bool feasible_ = false;
  Coloring base_;
  long long base_ones_ = 0;
  struct Piece {
    std::vector<long long> weights;
    std::vector<std::vector<std::pair<Vertex, int>>> colours;  // instance vertex, colour
  };
  std::vector<Piece> pieces_;
};

/// Runs build_h, reduce_h, build_hstar, reduce_hstar, assert_blue_cliques and
/// option enumeration. Throws InvariantBreach (with a P5 witness when one is
/// found) if a blue component is not a clique.
TroubleProfile trouble_profile(const TroublesomeInstance& inst, ColouringMode mode = ColouringMode::SemiAcyclic,
                               AuxCounters* counters = nullptr);

struct TroubleResult {
  std::optional<long long> t;  // nullopt stands for infinity
  Coloring witness;            // verified when t is finite
};

TroubleResult t_of(const TroublesomeInstance& inst, ColouringMode mode = ColouringMode::SemiAcyclic,
                   AuxCounters* counters = nullptr);

}  // namespace nearbip
