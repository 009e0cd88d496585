#pragma once

#include <string>
#include <vector>

#include "graphmin/foliage.hpp"
#include "graphmin/graph.hpp"
#include "graphmin/ops.hpp"
#include "graphmin/orbit.hpp"

namespace graphmin {

enum class Answer { Yes, No, Unknown };

std::string to_string(Answer answer);

/// Outcome of a vertex-minor query. `witness` is non-empty only for Yes
/// (it may legitimately be empty when the source already is the target);
/// `rule` names what settled the answer.
struct Decision {
  Answer answer = Answer::Unknown;
  OpSequence witness;
  std::string rule;
};

/// Rule tags shared by the deciders.
namespace rules {
inline constexpr const char* kBruteForce = "brute-force";
inline constexpr const char* kBudgetExhausted = "budget-exhausted";
}  // namespace rules

/// Exhaustive decision of H < G. Every vertex outside V(H) is measured in
/// ascending label order with each of Z, Y, X (the X neighbor being the
/// smallest one), and the result is looked up in the LC orbit of H. The
/// witness is the measurement sequence followed by the local
/// complementations that reach H exactly.
///
/// Throws std::invalid_argument when V(H) is not a subset of V(G). An
/// orbit larger than `node_budget` yields Answer::Unknown.
Decision decide_vertex_minor(const Graph& g, const Graph& h, std::size_t node_budget = kDefaultNodeBudget);

/// A rewritten graph plus the steps that produced it from the input.
struct Reduction {
  Graph graph;
  OpSequence ops;
};

/// Greedily removes foliage vertices outside `protected_vertices`: twins
/// first, then leaves, then axils (local complement at the axil and at its
/// leaf, then delete the axil). Smallest labels go first.
///
/// The vertex-minor answer for any target on the protected labels is
/// unchanged as long as that target has no isolated vertices.
Reduction source_reduce(const Graph& g, VertexSet protected_vertices);

/// Same, protecting V(target). Throws std::invalid_argument when the
/// target has an isolated vertex, where the reduction is unsound.
Reduction source_reduce(const Graph& g, const Graph& target);

/// Builds F_{W,R}(G) as a vertex-minor of G. Per block: nothing for a
/// singleton; for a star, local complement at the axil then at the
/// representative (skipped when the representative is the axil), then
/// delete the other members; for a clique or anticlique, delete every
/// member but the representative. The result is checked against the
/// quotient graph and std::logic_error is thrown on mismatch.
Reduction extract_foliage_graph(const Graph& g, const Partition& w, const std::vector<Vertex>& representatives);

/// Reduces the source of the query H < G to F_{W,R}(G). Requires
/// V(H) within R and no isolated vertex in H (std::invalid_argument).
Reduction foliage_source_reduce(const Graph& g, const Graph& h, const Partition& w,
                                const std::vector<Vertex>& representatives);

enum class Persistence { Equivalent, AllIsolated, Empty, Violation };

std::string to_string(Persistence p);

/// Classifies A ∩ V(H) for a set A of pairwise foliage-equivalent vertices
/// of G, given H < G. Violation is never expected for valid inputs.
/// Throws std::invalid_argument if A is not pairwise equivalent in G.
Persistence class_persistence_check(const Graph& g, const Graph& h, VertexSet a);

struct ReducedPair {
  Reduction source;
  Reduction target;
};

/// Removes v from both graphs given v ~F w in each: delete v when v is a
/// leaf of w or a twin of w; local complement at v then w and delete v
/// when v is the axil of w. If H < G held, the reduced target is a
/// vertex-minor of the reduced source. The converse does not hold.
///
/// v ~F w is recomputed in both graphs; std::invalid_argument otherwise.
ReducedPair target_reduce(const Graph& g, const Graph& h, Vertex v, Vertex w);

/// Lifts a foliage partition of H to G by adding singletons on
/// V(G) \ V(H), checks it is a foliage partition of G, and returns
/// (F_{W,R}(G), F_{W',R'}(H)). Throws std::invalid_argument when the lifted
/// partition is not a foliage partition of G.
ReducedPair foliage_target_reduce(const Graph& g, const Graph& h, const Partition& target_partition,
                                  const std::vector<Vertex>& target_representatives);

}  // namespace graphmin
