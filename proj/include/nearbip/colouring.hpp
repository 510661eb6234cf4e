#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nearbip/graph.hpp"

namespace nearbip {

/// Subset of {1,2,3}; colour c is bit c-1.
using ColourSet = std::uint8_t;

inline constexpr ColourSet kAllColours = 0b111;

constexpr ColourSet colour_bit(int c) { return static_cast<ColourSet>(1U << (c - 1)); }
constexpr bool has_colour(ColourSet s, int c) { return (s >> (c - 1)) & 1U; }
constexpr int colour_count(ColourSet s) { return ((s >> 0) & 1) + ((s >> 1) & 1) + ((s >> 2) & 1); }
/// The least colour in s, or 0 if s is empty.
constexpr int least_colour(ColourSet s) { return s == 0 ? 0 : (s & 1) ? 1 : (s & 2) ? 2 : 3; }

using ListAssignment = std::vector<ColourSet>;

/// SemiAcyclic: colours 2 and 3 must induce a forest. Proper: only a proper
/// colouring is required (the odd cycle transversal setting).
enum class ColouringMode { SemiAcyclic, Proper };

/// Colour per vertex in {1,2,3}; 0 marks an uncoloured vertex.
using Coloring = std::vector<int>;

ListAssignment full_lists(int n);

/// "{1,3}" style rendering.
std::string format_colour_set(ColourSet s);

/// One line per vertex, "v: c1 c2 ...". Vertices not mentioned keep {1,2,3}.
/// Blank lines and '#' comments are skipped. Throws ParseError.
ListAssignment parse_lists(std::string_view text, int n);
std::string emit_lists(const ListAssignment& lists);

bool is_total(const Coloring& c);
bool is_proper(const Graph& g, const Coloring& c);
bool respects_lists(const ListAssignment& lists, const Coloring& c);

/// Proper, total, and colours 2 and 3 together induce a forest.
bool is_semi_acyclic(const Graph& g, const Coloring& c);

/// Vertices with colour `colour`, ascending.
VertexSet colour_class(const Coloring& c, int colour);

}  // namespace nearbip
