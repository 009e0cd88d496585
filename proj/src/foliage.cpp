#include "graphmin/foliage.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace graphmin {

LeafAxilSet leaves_axils(const Graph& g) {
  LeafAxilSet out;
  for (Vertex v : g.vertices()) {
    const VertexSet nbrs = g.neighbors(v);
    if (nbrs.size() == 1) out.emplace_back(v, nbrs.min());
  }
  return out;
}

bool is_twin_pair(const Graph& g, Vertex v, Vertex w) {
  if (v == w) return false;
  // Compare N(v) \ w against N(w) \ v with both cross bits masked out.
  const VertexSet nv = g.neighbors(v) - VertexSet{w};
  const VertexSet nw = g.neighbors(w) - VertexSet{v};
  return nv == nw && !nv.empty();
}

TwinSet twins(const Graph& g) {
  TwinSet out;
  for (Vertex v : g.vertices()) {
    for (Vertex w : g.vertices()) {
      if (v < w && is_twin_pair(g, v, w)) out.emplace_back(v, w);
    }
  }
  return out;
}

VertexSet foliage_set(const Graph& g) {
  VertexSet out;
  for (auto [leaf, axil] : leaves_axils(g)) {
    out.insert(leaf);
    out.insert(axil);
  }
  for (auto [a, b] : twins(g)) {
    out.insert(a);
    out.insert(b);
  }
  return out;
}

bool foliage_equivalent(const Graph& g, Vertex v, Vertex w) {
  g.require(v);
  g.require(w);
  if (v == w) return true;
  const VertexSet nv = g.neighbors(v);
  const VertexSet nw = g.neighbors(w);
  if (nv == VertexSet{w} || nw == VertexSet{v}) return true;
  return is_twin_pair(g, v, w);
}

Partition::Partition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  VertexSet seen;
  for (VertexSet b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition block is empty");
    if (!(b & seen).empty()) {
      throw std::invalid_argument("partition blocks overlap on " + (b & seen).to_string());
    }
    seen = seen | b;
  }
  std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
}

Partition Partition::singletons(VertexSet vs) {
  std::vector<VertexSet> blocks;
  for (Vertex v : vs) blocks.push_back(VertexSet{v});
  return Partition(std::move(blocks));
}

VertexSet Partition::support() const {
  VertexSet out;
  for (VertexSet b : blocks_) out = out | b;
  return out;
}

std::size_t Partition::block_of(Vertex v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].contains(v)) return i;
  }
  throw std::out_of_range("vertex " + std::to_string(v) + " is in no partition block");
}

bool Partition::refines(const Partition& other) const {
  if (support() != other.support()) return false;
  return std::all_of(blocks_.begin(), blocks_.end(), [&](VertexSet b) {
    return b.is_subset_of(other.blocks_[other.block_of(b.min())]);
  });
}

std::string Partition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i > 0) out += ",";
    out += blocks_[i].to_string();
  }
  return out + "}";
}

Partition canonical_foliage_partition(const Graph& g) {
  // Union-find over the relation, then a full pairwise check that every
  // class is a clique of the relation (i.e. that it was transitive).
  std::vector<Vertex> parent(static_cast<std::size_t>(g.capacity()) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [leaf, axil] : leaves_axils(g)) parent[root(leaf)] = root(axil);
  for (auto [a, b] : twins(g)) parent[root(a)] = root(b);

  std::vector<VertexSet> by_root(parent.size());
  for (Vertex v : g.vertices()) by_root[root(v)].insert(v);
  std::vector<VertexSet> blocks;
  for (VertexSet b : by_root) {
    if (b.empty()) continue;
    for (Vertex v : b) {
      for (Vertex w : b) {
        if (v < w && !foliage_equivalent(g, v, w)) {
          throw std::logic_error("foliage relation is not transitive on " + b.to_string());
        }
      }
    }
    blocks.push_back(b);
  }
  return Partition(std::move(blocks));
}

bool is_foliage_partition(const Graph& g, const Partition& w) {
  if (w.support() != g.vertices()) {
    throw std::invalid_argument("partition " + w.to_string() + " does not cover " + g.vertices().to_string());
  }
  return w.refines(canonical_foliage_partition(g));
}

Graph FoliageGraph::labeled() const {
  const VertexSet labels{std::span<const Vertex>(representatives)};
  Graph out(source_capacity, labels);
  for (const Edge& e : graph.edges()) {
    out.add_edge(representatives[e.first - 1], representatives[e.second - 1]);
  }
  return out;
}

std::vector<Vertex> min_representatives(const Partition& w) {
  std::vector<Vertex> out;
  for (VertexSet b : w.blocks()) out.push_back(b.min());
  return out;
}

namespace {

Graph quotient(const Graph& g, const Partition& w) {
  const int k = static_cast<int>(w.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    VertexSet reach;
    for (Vertex v : w.blocks()[i]) reach = reach | g.neighbors(v);
    for (int j = i + 1; j < k; ++j) {
      if (!(reach & w.blocks()[j]).empty()) out.add_edge(i + 1, j + 1);
    }
  }
  return out;
}

}  // namespace

FoliageGraph foliage_graph(const Graph& g, const Partition& w, std::optional<std::vector<Vertex>> representatives) {
  if (!is_foliage_partition(g, w)) {
    throw std::invalid_argument("partition " + w.to_string() + " is not a foliage partition");
  }
  std::vector<Vertex> reps = representatives ? std::move(*representatives) : min_representatives(w);
  if (reps.size() != w.size()) {
    throw std::invalid_argument("need one representative per block, got " + std::to_string(reps.size()));
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!w.blocks()[i].contains(reps[i])) {
      throw std::invalid_argument("representative " + std::to_string(reps[i]) + " is outside block " +
                                  w.blocks()[i].to_string());
    }
  }
  return {quotient(g, w), w, std::move(reps), g.capacity()};
}

FoliageGraph nth_foliage_graph(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("foliage graph order must be at least 1");
  FoliageGraph current = foliage_graph(g, canonical_foliage_partition(g));
  for (int level = 1; level < k; ++level) {
    const Partition next = canonical_foliage_partition(current.graph);
    std::vector<VertexSet> merged;
    for (VertexSet b : next.blocks()) {
      VertexSet originals;
      for (Vertex i : b) originals = originals | current.blocks.blocks()[i - 1];
      merged.push_back(originals);
    }
    Partition blocks(std::move(merged));
    current = {quotient(current.graph, next), blocks, min_representatives(blocks), g.capacity()};
  }
  return current;
}

FoliageGraph lifted_local_complement(const Graph& g, const Partition& w, Vertex a) {
  if (g.degree(a) <= 1) {
    throw std::invalid_argument("lifted local complementation needs deg(" + std::to_string(a) + ") > 1");
  }
  const FoliageGraph before = foliage_graph(g, w);
  FoliageGraph after = foliage_graph(local_complement(g, a), w);
  const Graph lifted = local_complement(before.graph, static_cast<Vertex>(w.block_of(a)) + 1);
  if (!(lifted == after.graph)) {
    throw std::logic_error("lifted local complementation mismatch at vertex " + std::to_string(a) + ": " +
                           to_string(after.graph) + " vs " + to_string(lifted));
  }
  return after;
}

BlockShape classify_block(const Graph& g, VertexSet block) {
  if (block.empty() || !block.is_subset_of(g.vertices())) {
    throw std::invalid_argument("block " + block.to_string() + " is not a set of alive vertices");
  }
  if (block.size() == 1) return {BlockKind::Singleton, 0};

  std::size_t inner_edges = 0;
  for (Vertex v : block) inner_edges += static_cast<std::size_t>((g.neighbors(v) & block).size());
  inner_edges /= 2;
  const std::size_t m = static_cast<std::size_t>(block.size());

  auto pairwise_twins = [&] {
    for (Vertex v : block) {
      for (Vertex u : block) {
        if (v < u && !is_twin_pair(g, v, u)) return false;
      }
    }
    return true;
  };

  // Star: one centre adjacent to every other member, each of which is a
  // leaf of g.
  // Candidates are tried from the largest label down, so an isolated K2
  // reports its larger member.
  if (inner_edges == m - 1) {
    std::vector<Vertex> members = block.to_vector();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      const Vertex centre = *it;
      if ((g.neighbors(centre) & block) != block - VertexSet{centre}) continue;
      const bool leaves = std::all_of(members.begin(), members.end(),
                                      [&](Vertex v) { return v == centre || g.degree(v) == 1; });
      if (leaves) return {BlockKind::Star, centre};
    }
  }
  if (inner_edges == m * (m - 1) / 2 && pairwise_twins()) return {BlockKind::Clique, 0};
  if (inner_edges == 0 && pairwise_twins()) return {BlockKind::Anticlique, 0};
  throw std::invalid_argument("block " + block.to_string() + " is not a singleton, star, clique or anticlique");
}

std::string to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Singleton:
      return "singleton";
    case BlockKind::Star:
      return "star";
    case BlockKind::Clique:
      return "clique";
    case BlockKind::Anticlique:
      return "anticlique";
  }
  return "?";
}

}  // namespace graphmin
