#pragma once

#include <string>
#include <vector>

#include "graphmin/graph.hpp"

namespace graphmin {

enum class OpKind { LocalComplement, Delete, MeasureZ, MeasureY, MeasureX };

/// One replayable rewrite step. `neighbor` is only meaningful for
/// MeasureX and is 0 when the measured vertex was isolated.
struct Op {
  OpKind kind = OpKind::LocalComplement;
  Vertex vertex = 0;
  Vertex neighbor = 0;

  static Op lc(Vertex v) { return {OpKind::LocalComplement, v, 0}; }
  static Op del(Vertex v) { return {OpKind::Delete, v, 0}; }
  static Op z(Vertex v) { return {OpKind::MeasureZ, v, 0}; }
  static Op y(Vertex v) { return {OpKind::MeasureY, v, 0}; }
  static Op x(Vertex v, Vertex b) { return {OpKind::MeasureX, v, b}; }

  friend bool operator==(const Op&, const Op&) = default;
};

using OpSequence = std::vector<Op>;

/// Applies one step. Throws when the step is undefined on `g` (dead
/// target, or an X neighbor that is absent or not adjacent while N(v) is
/// non-empty).
void apply(Graph& g, const Op& op);

/// Replays the whole sequence on a copy of `g`.
Graph replay(const Graph& g, const OpSequence& ops);

/// Token form used in text and JSON output: "LC 2", "DEL 3", "Z 3",
/// "Y 2", "X 2 1" (the neighbor is omitted for an isolated vertex).
std::string to_string(const Op& op);
std::string to_string(const OpSequence& ops);
/// Inverse of to_string(const Op&).
Op parse_op(const std::string& text);

/// Applies `rename[v]` to every label in the sequence.
OpSequence relabel(const OpSequence& ops, const std::vector<Vertex>& rename);

}  // namespace graphmin
