#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nearbip/graph.hpp"

namespace nearbip {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line) : std::runtime_error(format(what, line)), line_(line) {}
  /// 1-based line number, or 0 when not line-oriented.
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& what, int line) {
    return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
  }
  int line_;
};

/// Edge-list text: a header line "n m" followed by m lines "u v".
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edgelist(std::string_view text);
std::string emit_edgelist(const Graph& g);

/// graph6 (bias-63 printable ASCII, column-wise upper triangle). An optional
/// ">>graph6<<" header and trailing whitespace are accepted.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

}  // namespace nearbip
