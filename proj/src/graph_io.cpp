#include "nearbip/graph_io.hpp"

#include <charconv>
#include <optional>
#include <vector>

namespace nearbip {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

// Parses exactly two non-negative integers separated by whitespace.
std::optional<std::pair<long long, long long>> two_ints(std::string_view s) {
  long long vals[2];
  const char* p = s.data();
  const char* end = s.data() + s.size();
  for (int k = 0; k < 2; ++k) {
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    auto [next, ec] = std::from_chars(p, end, vals[k]);
    if (ec != std::errc{} || next == p) return std::nullopt;
    p = next;
  }
  while (p < end && (*p == ' ' || *p == '\t')) ++p;
  if (p != end) return std::nullopt;
  return std::make_pair(vals[0], vals[1]);
}

}  // namespace

Graph parse_edgelist(std::string_view text) {
  long long n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto pair = two_ints(line);
    if (!pair) throw ParseError("malformed line '" + std::string(line) + "'", line_no);
    auto [a, b] = *pair;
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("negative header value", line_no);
      n = a;
      m = b;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError("more edge lines than the header's m=" + std::to_string(m), line_no);
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError("vertex index out of range (n=" + std::to_string(n) + ")", line_no);
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (n < 0) throw ParseError("missing header line 'n m'", line_no);
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()),
                     line_no);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_edgelist(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
  std::size_t pos = 0;
  auto next_byte = [&]() -> int {
    if (pos >= line.size()) throw ParseError("graph6: truncated input", 0);
    int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character code " + std::to_string(c), 0);
    return c - 63;
  };
  long long n = next_byte();
  if (n == 63) {
    int groups = 3;
    if (pos < line.size() && line[pos] == '~') {
      ++pos;
      groups = 6;
    }
    n = 0;
    for (int k = 0; k < groups; ++k) n = (n << 6) | next_byte();
  }
  if (n > (1LL << 20)) throw ParseError("graph6: vertex count too large", 0);
  std::vector<Edge> edges;
  int bits_left = 0;
  int current = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = next_byte();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != line.size()) throw ParseError("graph6: trailing characters after bit stream", 0);
  return Graph(static_cast<int>(n), edges);
}

std::string emit_graph6(const Graph& g) {
  std::string out;
  long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out += "~~";
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::EdgeList) return parse_edgelist(text);
  // first non-empty, non-comment line
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    if (!line.empty() && line.front() != '#') return parse_graph6(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  throw ParseError("graph6: empty input", 0);
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::EdgeList ? emit_edgelist(g) : emit_graph6(g) + "\n";
}

}  // namespace nearbip
