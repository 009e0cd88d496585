#pragma once

#include <string>
#include <utility>

#include "graphmin/graph.hpp"
#include "graphmin/vminor.hpp"

namespace graphmin {

enum class Topology { Line, Ring, Tree };

std::string to_string(Topology t);
/// "line", "ring" or "tree"; throws std::invalid_argument otherwise.
Topology parse_topology(const std::string& text);

/// Can K2 + K2 on {a1,a2} and {b1,b2} be extracted from the topology?
/// Line and Ring use vertices 1..n in path / cyclic order. Tree carries
/// its own graph (n is taken from it).
struct BellQuery {
  Topology topology = Topology::Line;
  int n = 0;
  Graph tree;
  std::pair<Vertex, Vertex> pair_a;
  std::pair<Vertex, Vertex> pair_b;

  /// The graph being queried.
  Graph graph() const;
  /// K2 + K2 on the queried labels.
  Graph target() const;
};

namespace rules {
inline constexpr const char* kSeparatedPairs = "separated-pairs";
inline constexpr const char* kNestedPairs = "nested-pairs";
inline constexpr const char* kInterleavedPairs = "interleaved-pairs";
inline constexpr const char* kAdjacentPairs = "adjacent-pairs";
inline constexpr const char* kPathsSeparated = "paths-separated";
inline constexpr const char* kPathsIntersect = "paths-intersect";
inline constexpr const char* kPathsAdjacent = "paths-adjacent";
inline constexpr const char* kNonCrossingPairs = "non-crossing-pairs";
inline constexpr const char* kCrossingPairs = "crossing-pairs";
inline constexpr const char* kThreeConsecutive = "three-consecutive";
}  // namespace rules

/// Each decider throws std::invalid_argument for a malformed query: wrong
/// topology, endpoints not four distinct alive vertices, or (tree) a graph
/// that is not a tree. A yes carries a witness that replays to target()
/// exactly.
Decision decide_bell_line(const BellQuery& q);
Decision decide_bell_tree(const BellQuery& q);
Decision decide_bell_ring(const BellQuery& q);
Decision decide_bell(const BellQuery& q);

/// One-sided impossibility test for K2 on `pair` plus the isolated vertex
/// b. Line: b lies strictly between the pair. Ring (n >= 4): the pair is
/// adjacent and b sits next to one of its ends. Tree: always false. A false
/// answer says nothing.
bool lemma_blockers(Topology topology, int n, std::pair<Vertex, Vertex> pair, Vertex b);

/// Witness for the six-ring 1..6 with pairs {1,3},{4,6}, machine-found by
/// the brute-force decider and stored.
const OpSequence& six_ring_template();

}  // namespace graphmin
