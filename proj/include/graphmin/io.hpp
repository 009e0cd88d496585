#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "graphmin/graph.hpp"

namespace graphmin {

/// Input error carrying a 1-based line and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Edge-list text (see docs/formats.md):
///
///     n
///     [labels v1 v2 ...]
///     a b
///     ...
///
/// Blank lines and lines starting with '#' are ignored. Without a
/// `labels` line every label 1..n is alive.
Graph parse_edge_list(std::string_view text);

/// Canonical writer: `n`, a `labels` line only when the alive set is not
/// 1..n, then edges in ascending (min, max) order, each line ending in
/// '\n'. parse_edge_list(write_edge_list(g)) == g.
std::string write_edge_list(const Graph& g);

/// Standard graph6 (one graph, optional trailing newline, optional
/// ">>graph6<<" header). Labels are 1..n.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// DOT text for a graph, one node per alive vertex.
std::string write_dot(const Graph& g, const std::string& name = "G");

std::string read_file(const std::string& path);

}  // namespace graphmin
