#include "nearbip/colouring.hpp"

#include <charconv>

#include "nearbip/detect.hpp"
#include "nearbip/graph_io.hpp"

namespace nearbip {

ListAssignment full_lists(int n) { return ListAssignment(static_cast<std::size_t>(n), kAllColours); }

std::string format_colour_set(ColourSet s) {
  std::string out = "{";
  for (int c = 1; c <= 3; ++c) {
    if (!has_colour(s, c)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(c);
  }
  return out + "}";
}

ListAssignment parse_lists(std::string_view text, int n) {
  ListAssignment lists = full_lists(n);
  std::vector<bool> seen(n, false);
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'v: colours'", line_no);
    int v = -1;
    auto head = line.substr(0, colon);
    while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), v);
    if (ec != std::errc{} || ptr != head.data() + head.size()) throw ParseError("bad vertex index", line_no);
    if (v < 0 || v >= n) throw ParseError("vertex " + std::to_string(v) + " out of range", line_no);
    if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice", line_no);
    seen[v] = true;
    ColourSet s = 0;
    for (char ch : line.substr(colon + 1)) {
      if (ch == ' ' || ch == '\t' || ch == ',') continue;
      if (ch < '1' || ch > '3') throw ParseError(std::string("invalid colour '") + ch + "'", line_no);
      s |= colour_bit(ch - '0');
    }
    lists[v] = s;
  }
  return lists;
}

std::string emit_lists(const ListAssignment& lists) {
  std::string out;
  for (std::size_t v = 0; v < lists.size(); ++v) {
    out += std::to_string(v) + ":";
    for (int c = 1; c <= 3; ++c)
      if (has_colour(lists[v], c)) out += " " + std::to_string(c);
    out += "\n";
  }
  return out;
}

bool is_total(const Coloring& c) {
  for (int x : c)
    if (x < 1 || x > 3) return false;
  return true;
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.size()) != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (c[u] != 0 && c[u] == c[v]) return false;
  return true;
}

bool respects_lists(const ListAssignment& lists, const Coloring& c) {
  if (lists.size() != c.size()) return false;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] < 1 || c[v] > 3 || !has_colour(lists[v], c[v])) return false;
  return true;
}

bool is_semi_acyclic(const Graph& g, const Coloring& c) {
  if (!is_total(c) || !is_proper(g, c)) return false;
  VertexSet rest;
  for (int v = 0; v < g.order(); ++v)
    if (c[v] != 1) rest.push_back(v);
  return is_forest(g, rest);
}

VertexSet colour_class(const Coloring& c, int colour) {
  VertexSet out;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (c[v] == colour) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace nearbip
