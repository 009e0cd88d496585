#include "graphmin/graph.hpp"

#include <algorithm>
#include <sstream>

namespace graphmin {

namespace {

void check_label(Vertex v) {
  if (v < 1 || v > kMaxVertices) {
    throw std::out_of_range("vertex label " + std::to_string(v) + " outside 1.." +
                            std::to_string(kMaxVertices));
  }
}

std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> labels) {
  for (Vertex v : labels) insert(v);
}

VertexSet::VertexSet(std::span<const Vertex> labels) {
  for (Vertex v : labels) insert(v);
}

VertexSet VertexSet::range(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
  return VertexSet(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

void VertexSet::insert(Vertex v) {
  check_label(v);
  bits_ |= bit(v);
}

void VertexSet::erase(Vertex v) {
  check_label(v);
  bits_ &= ~bit(v);
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Edge::Edge(Vertex a, Vertex b) : first(std::min(a, b)), second(std::max(a, b)) {
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
}

EdgeSet::EdgeSet(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) edges_.emplace_back(a, b);
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

EdgeSet::EdgeSet(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

Graph::Graph(int n) : Graph(n, VertexSet::range(n)) {}

Graph::Graph(int n, VertexSet alive) : n_(n), alive_(alive), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::out_of_range("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxVertices));
  }
  if (!alive.is_subset_of(VertexSet::range(n))) {
    throw std::out_of_range("alive labels " + alive.to_string() + " exceed capacity " +
                            std::to_string(n));
  }
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  return from_edges(n, EdgeSet(edges));
}

Graph Graph::from_edges(int n, const EdgeSet& edges) { return from_edges(n, VertexSet::range(n), edges); }

Graph Graph::from_edges(int n, VertexSet alive, const EdgeSet& edges) {
  Graph g(n, alive);
  for (const Edge& e : edges) g.add_edge(e.first, e.second);
  return g;
}

void Graph::require(Vertex v) const {
  if (!alive_.contains(v)) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
}

VertexSet Graph::neighbors(Vertex v) const {
  require(v);
  return VertexSet(row(v));
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  require(a);
  require(b);
  return (row(a) & bit(b)) != 0;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v : alive_) twice += static_cast<std::size_t>(std::popcount(row(v)));
  return twice / 2;
}

EdgeSet Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex a : alive_) {
    for (Vertex b : VertexSet(row(a))) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return EdgeSet(std::move(out));
}

void Graph::add_edge(Vertex a, Vertex b) {
  require(a);
  require(b);
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  rows_[a - 1] |= bit(b);
  rows_[b - 1] |= bit(a);
}

void Graph::remove_edge(Vertex a, Vertex b) {
  require(a);
  require(b);
  rows_[a - 1] &= ~bit(b);
  rows_[b - 1] &= ~bit(a);
}

void Graph::toggle_edge(Vertex a, Vertex b) {
  require(a);
  require(b);
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  rows_[a - 1] ^= bit(b);
  rows_[b - 1] ^= bit(a);
}

void Graph::complement_neighborhood(Vertex a) {
  require(a);
  const std::uint64_t nbrs = row(a);
  // Row-masked XOR: every neighbor b toggles its adjacency to N(a) \ {b}.
  for (Vertex b : VertexSet(nbrs)) rows_[b - 1] ^= nbrs & ~bit(b);
}

void Graph::erase_vertex(Vertex a) {
  require(a);
  for (Vertex b : VertexSet(row(a))) rows_[b - 1] &= ~bit(a);
  rows_[a - 1] = 0;
  alive_.erase(a);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.alive_ != b.alive_) return false;
  for (Vertex v : a.alive_) {
    if (a.row(v) != b.row(v)) return false;
  }
  return true;
}

Graph local_complement(const Graph& g, Vertex a) {
  Graph out = g;
  out.complement_neighborhood(a);
  return out;
}

Graph delete_vertex(const Graph& g, Vertex a) {
  Graph out = g;
  out.erase_vertex(a);
  return out;
}

Graph delete_vertices(const Graph& g, VertexSet vs) {
  Graph out = g;
  for (Vertex v : vs) out.erase_vertex(v);
  return out;
}

Graph measure_z(const Graph& g, Vertex a) { return delete_vertex(g, a); }

Graph measure_y(const Graph& g, Vertex a) {
  Graph out = g;
  out.complement_neighborhood(a);
  out.erase_vertex(a);
  return out;
}

Vertex default_x_neighbor(const Graph& g, Vertex a) {
  const VertexSet nbrs = g.neighbors(a);
  return nbrs.empty() ? 0 : nbrs.min();
}

Graph measure_x(const Graph& g, Vertex a) {
  const Vertex b = default_x_neighbor(g, a);
  if (b == 0) return delete_vertex(g, a);
  return measure_x(g, a, b);
}

Graph measure_x(const Graph& g, Vertex a, Vertex b) {
  if (!g.adjacent(a, b)) {
    throw std::invalid_argument("vertex " + std::to_string(b) + " is not a neighbor of " +
                                std::to_string(a));
  }
  Graph out = g;
  out.complement_neighborhood(b);
  out.complement_neighborhood(a);
  out.complement_neighborhood(b);
  out.erase_vertex(a);
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.capacity(), g.vertices());
  for (Vertex a : g.vertices()) {
    for (Vertex b : g.vertices()) {
      if (a < b && !g.adjacent(a, b)) out.add_edge(a, b);
    }
  }
  return out;
}

Graph induced_subgraph(const Graph& g, VertexSet keep) {
  if (!keep.is_subset_of(g.vertices())) {
    throw std::out_of_range("induced subgraph on " + keep.to_string() +
                            " includes labels outside " + g.vertices().to_string());
  }
  return delete_vertices(g, g.vertices() - keep);
}

Graph symmetric_difference(const Graph& g, const EdgeSet& f) {
  Graph out = g;
  for (const Edge& e : f) out.toggle_edge(e.first, e.second);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet component{unseen.min()};
    VertexSet frontier = component;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next = next | VertexSet(g.row(v));
      frontier = next - component;
      component = component | frontier;
    }
    out.push_back(component);
    unseen = unseen - component;
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) g.add_edge(a, b);
  }
  return g;
}

Graph line_graph(int n) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph ring_graph(int n) {
  if (n < 3) throw std::invalid_argument("ring graph needs at least 3 vertices");
  Graph g = line_graph(n);
  g.add_edge(n, 1);
  return g;
}

Graph bell_pairs(int n, std::pair<Vertex, Vertex> a, std::pair<Vertex, Vertex> b) {
  Graph g(n, VertexSet{a.first, a.second, b.first, b.second});
  if (g.order() != 4) throw std::invalid_argument("Bell pairs need four distinct vertices");
  g.add_edge(a.first, a.second);
  g.add_edge(b.first, b.second);
  return g;
}

std::string to_string(const Graph& g) {
  std::ostringstream out;
  out << "V=" << g.vertices().to_string() << " E={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) out << ",";
    out << e.first << "-" << e.second;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace graphmin
