#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace graphmin {

/// Vertex labels are 1-based and persistent: deleting a vertex never
/// renumbers the others.
using Vertex = int;

/// Largest supported label. Adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

/// A set of vertex labels in [1, kMaxVertices], stored as a bitmask
/// where bit (v - 1) marks label v.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> labels);
  explicit VertexSet(std::span<const Vertex> labels);

  /// Labels 1..n.
  static VertexSet range(int n);

  constexpr std::uint64_t bits() const { return bits_; }
  bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  /// Smallest label; precondition: non-empty.
  Vertex min() const { return std::countr_zero(bits_) + 1; }
  Vertex max() const { return kMaxVertices - std::countl_zero(bits_); }

  void insert(Vertex v);
  void erase(Vertex v);

  bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;
  std::string to_string() const;

  friend VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  /// Set difference.
  friend VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Unordered vertex pair, normalized so that first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free collection of normalized edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<std::pair<Vertex, Vertex>> pairs);
  explicit EdgeSet(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(Edge e) const;
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  std::vector<Edge> edges_;
};

/// Labeled simple undirected graph. `capacity()` is the label range
/// 1..n the graph was created with; `vertices()` is the alive subset.
///
/// Invariants: adjacency is symmetric, there are no self-loops, and every
/// neighbor entry is an alive label.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph with labels 1..n alive.
  explicit Graph(int n);

  /// Edgeless graph with capacity n and the given alive labels.
  Graph(int n, VertexSet alive);

  static Graph from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);
  static Graph from_edges(int n, const EdgeSet& edges);
  static Graph from_edges(int n, VertexSet alive, const EdgeSet& edges);

  int capacity() const { return n_; }
  VertexSet vertices() const { return alive_; }
  int order() const { return alive_.size(); }
  bool empty() const { return alive_.empty(); }
  bool contains(Vertex v) const { return alive_.contains(v); }

  VertexSet neighbors(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex a, Vertex b) const;
  std::size_t edge_count() const;
  EdgeSet edges() const;

  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  void toggle_edge(Vertex a, Vertex b);

  /// In-place counterparts of the value-producing rewrites below.
  void complement_neighborhood(Vertex a);
  void erase_vertex(Vertex a);

  /// Throws std::out_of_range naming the label if it is not alive.
  void require(Vertex v) const;

  /// Graphs are equal when their alive sets and edges agree; the label
  /// capacity does not take part.
  friend bool operator==(const Graph& a, const Graph& b);

  /// Row bits of an alive vertex, in VertexSet encoding.
  std::uint64_t row(Vertex v) const { return rows_[static_cast<std::size_t>(v - 1)]; }

 private:
  int n_ = 0;
  VertexSet alive_;
  std::vector<std::uint64_t> rows_;
};

/// Local complementation: toggles every edge inside N(a).
Graph local_complement(const Graph& g, Vertex a);

Graph delete_vertex(const Graph& g, Vertex a);
Graph delete_vertices(const Graph& g, VertexSet vs);

/// Pauli-Z measurement: G \ a.
Graph measure_z(const Graph& g, Vertex a);
/// Pauli-Y measurement: tau_a(G) \ a.
Graph measure_y(const Graph& g, Vertex a);
/// Pauli-X measurement: tau_b(tau_a(tau_b(G))) \ a with b in N(a). Falls back
/// to Z when a is isolated. Without `b`, the smallest neighbor is used.
Graph measure_x(const Graph& g, Vertex a);
Graph measure_x(const Graph& g, Vertex a, Vertex b);

/// Neighbor chosen by measure_x(g, a) when no neighbor is given; 0 when a
/// is isolated.
Vertex default_x_neighbor(const Graph& g, Vertex a);

Graph complement(const Graph& g);
/// Keeps labels; throws if `keep` is not a subset of the alive labels.
Graph induced_subgraph(const Graph& g, VertexSet keep);
/// G + F: toggles every edge of F. Throws if F names a dead label.
Graph symmetric_difference(const Graph& g, const EdgeSet& f);
/// Components sorted by their smallest label.
std::vector<VertexSet> connected_components(const Graph& g);

/// Complete graph on labels 1..n.
Graph complete_graph(int n);
/// Path 1-2-...-n.
Graph line_graph(int n);
/// Cycle 1-2-...-n-1.
Graph ring_graph(int n);
/// Disjoint Bell pairs {a1,a2} and {b1,b2} on capacity n.
Graph bell_pairs(int n, std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b);

std::string to_string(const Graph& g);

}  // namespace graphmin
