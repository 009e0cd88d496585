#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmin/graph.hpp"

namespace graphmin {

/// (leaf, axil) pairs, sorted. A leaf has degree 1 and its axil is the
/// unique neighbor.
using LeafAxilSet = std::vector<std::pair<Vertex, Vertex>>;

/// Twin pairs {t1 < t2} with N(t1) \ t2 == N(t2) \ t1 != {}, sorted.
using TwinSet = std::vector<std::pair<Vertex, Vertex>>;

LeafAxilSet leaves_axils(const Graph& g);
TwinSet twins(const Graph& g);
bool is_twin_pair(const Graph& g, Vertex v, Vertex w);
/// Leaves, axils and twins.
VertexSet foliage_set(const Graph& g);

/// v ~F w: equal, a leaf-axil pair in either order, or twins.
bool foliage_equivalent(const Graph& g, Vertex v, Vertex w);

/// Disjoint non-empty blocks. Blocks are kept sorted by smallest member so
/// that two partitions of the same set compare equal iff they match.
class Partition {
 public:
  Partition() = default;
  /// Throws if blocks are empty or overlap.
  explicit Partition(std::vector<VertexSet> blocks);

  static Partition singletons(VertexSet vs);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  VertexSet support() const;

  /// Index of the block holding v; throws if none does.
  std::size_t block_of(Vertex v) const;

  /// this <= other: every block lies inside a block of `other`.
  bool refines(const Partition& other) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<VertexSet> blocks_;
};

/// Foliage-equivalence classes. Throws std::logic_error if the computed
/// relation turns out not to be transitive.
Partition canonical_foliage_partition(const Graph& g);

/// W <= F(V). Throws std::invalid_argument when W does not partition the
/// alive set of g.
bool is_foliage_partition(const Graph& g, const Partition& w);

/// Quotient of a graph by a foliage partition. Vertex i of `graph` (label
/// i, 1-based) stands for `blocks.blocks()[i - 1]`. When representatives
/// are set, `representatives[i - 1]` is the member chosen for block i.
struct FoliageGraph {
  Graph graph;
  Partition blocks;
  std::vector<Vertex> representatives;
  /// Label capacity of the source graph.
  int source_capacity = 0;

  /// The same quotient drawn on the representative labels, with the
  /// source graph's label capacity: F_{W,R}(G).
  Graph labeled() const;
};

/// Throws std::invalid_argument for an invalid foliage partition or a
/// representative outside its block.
FoliageGraph foliage_graph(const Graph& g, const Partition& w,
                           std::optional<std::vector<Vertex>> representatives = std::nullopt);

/// Default representatives: the smallest member of every block.
std::vector<Vertex> min_representatives(const Partition& w);

/// k-fold canonical quotient. Blocks are reported as sets of the original
/// vertices. Requires k >= 1.
FoliageGraph nth_foliage_graph(const Graph& g, int k);

/// Computes F_W(tau_a(G)) and checks it against tau_{W_a}(F_W(G)).
/// Throws std::invalid_argument when deg(a) <= 1 and std::logic_error if
/// the two sides disagree.
FoliageGraph lifted_local_complement(const Graph& g, const Partition& w, Vertex a);

enum class BlockKind { Singleton, Star, Clique, Anticlique };

struct BlockShape {
  BlockKind kind = BlockKind::Singleton;
  /// Star centre. For an isolated K2 both members are leaves of each
  /// other and the larger label is reported.
  Vertex axil = 0;
};

/// Shape of g[block]. A block of two adjacent vertices is a Star when one
/// of them has degree 1 in g (a leaf-axil pair) and a Clique otherwise.
/// Throws std::invalid_argument if the block fits no shape.
BlockShape classify_block(const Graph& g, VertexSet block);

std::string to_string(BlockKind kind);

}  // namespace graphmin
