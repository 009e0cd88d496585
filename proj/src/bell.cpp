#include "graphmin/bell.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace graphmin {

std::string to_string(Topology t) {
  switch (t) {
    case Topology::Line:
      return "line";
    case Topology::Ring:
      return "ring";
    case Topology::Tree:
      return "tree";
  }
  return "?";
}

Topology parse_topology(const std::string& text) {
  if (text == "line") return Topology::Line;
  if (text == "ring") return Topology::Ring;
  if (text == "tree") return Topology::Tree;
  throw std::invalid_argument("unknown topology '" + text + "' (expected line, ring or tree)");
}

Graph BellQuery::graph() const {
  switch (topology) {
    case Topology::Line:
      return line_graph(n);
    case Topology::Ring:
      return ring_graph(n);
    case Topology::Tree:
      return tree;
  }
  return {};
}

Graph BellQuery::target() const { return bell_pairs(graph().capacity(), pair_a, pair_b); }

const OpSequence& six_ring_template() {
  static const OpSequence ops = {Op::x(2, 1), Op::x(5, 4)};
  return ops;
}

namespace {

void validate(const BellQuery& q, Topology expected) {
  if (q.topology != expected) {
    throw std::invalid_argument("query topology is " + to_string(q.topology) + ", expected " + to_string(expected));
  }
  if (expected == Topology::Ring && q.n < 4) throw std::invalid_argument("ring needs at least 4 vertices");
  if (expected != Topology::Tree && (q.n < 4 || q.n > kMaxVertices)) {
    throw std::invalid_argument("vertex count " + std::to_string(q.n) + " out of range 4.." +
                                std::to_string(kMaxVertices));
  }
  const Graph g = q.graph();
  const Vertex ends[] = {q.pair_a.first, q.pair_a.second, q.pair_b.first, q.pair_b.second};
  VertexSet seen;
  for (Vertex v : ends) {
    if (!g.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
    if (seen.contains(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is used twice");
    seen.insert(v);
  }
}

std::pair<Vertex, Vertex> sorted(std::pair<Vertex, Vertex> p) {
  if (p.first > p.second) std::swap(p.first, p.second);
  return p;
}

// Cuts everything off the two paths, then shortens each path to a single
// edge by Y-measuring its interior.
OpSequence two_path_schedule(const Graph& g, const std::vector<Vertex>& path_a, const std::vector<Vertex>& path_b) {
  VertexSet on_paths;
  for (Vertex v : path_a) on_paths.insert(v);
  for (Vertex v : path_b) on_paths.insert(v);
  OpSequence ops;
  for (Vertex v : g.vertices() - on_paths) ops.push_back(Op::z(v));
  for (const auto* path : {&path_a, &path_b}) {
    for (std::size_t i = 1; i + 1 < path->size(); ++i) ops.push_back(Op::y((*path)[i]));
  }
  return ops;
}

std::vector<Vertex> interval(Vertex from, Vertex to) {
  std::vector<Vertex> out;
  for (Vertex v = from; v <= to; ++v) out.push_back(v);
  return out;
}

Decision yes(OpSequence ops, const char* rule) { return {Answer::Yes, std::move(ops), rule}; }
Decision no(const char* rule) { return {Answer::No, {}, rule}; }

}  // namespace

Decision decide_bell_line(const BellQuery& q) {
  validate(q, Topology::Line);
  auto [a1, a2] = sorted(q.pair_a);
  auto [b1, b2] = sorted(q.pair_b);
  if (b1 < a1) {
    std::swap(a1, b1);
    std::swap(a2, b2);
  }
  if (b2 < a2) return no(rules::kNestedPairs);
  if (b1 < a2) return no(rules::kInterleavedPairs);
  if (b1 - a2 < 2) return no(rules::kAdjacentPairs);
  return yes(two_path_schedule(q.graph(), interval(a1, a2), interval(b1, b2)), rules::kSeparatedPairs);
}

namespace {

std::vector<Vertex> tree_path(const Graph& g, Vertex from, Vertex to) {
  std::vector<Vertex> parent(static_cast<std::size_t>(g.capacity()) + 1, 0);
  std::vector<Vertex> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex u : g.neighbors(queue[head])) {
      if (parent[u] == 0) {
        parent[u] = queue[head];
        queue.push_back(u);
      }
    }
  }
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

Decision decide_bell_tree(const BellQuery& q) {
  validate(q, Topology::Tree);
  const Graph& g = q.tree;
  if (g.edge_count() + 1 != static_cast<std::size_t>(g.order()) || connected_components(g).size() != 1) {
    throw std::invalid_argument("graph is not a tree: " + to_string(g));
  }
  const std::vector<Vertex> path_a = tree_path(g, q.pair_a.first, q.pair_a.second);
  const std::vector<Vertex> path_b = tree_path(g, q.pair_b.first, q.pair_b.second);
  const VertexSet set_a{std::span<const Vertex>(path_a)};
  const VertexSet set_b{std::span<const Vertex>(path_b)};
  if (!(set_a & set_b).empty()) return no(rules::kPathsIntersect);
  for (Vertex v : set_a) {
    if (!(g.neighbors(v) & set_b).empty()) return no(rules::kPathsAdjacent);
  }
  return yes(two_path_schedule(g, path_a, path_b), rules::kPathsSeparated);
}

namespace {

// Vertices strictly between `from` and `to` walking the ring in direction
// `step` (+1 or -1).
std::vector<Vertex> ring_arc(int n, Vertex from, Vertex to, int step) {
  std::vector<Vertex> out;
  for (Vertex v = (from - 1 + step + n) % n + 1; v != to; v = (v - 1 + step + n) % n + 1) out.push_back(v);
  return out;
}

bool ring_adjacent(int n, Vertex u, Vertex v) {
  const int d = std::abs(u - v);
  return d == 1 || d == n - 1;
}

}  // namespace

Decision decide_bell_ring(const BellQuery& q) {
  validate(q, Topology::Ring);
  const int n = q.n;
  Vertex a1 = q.pair_a.first;
  Vertex a2 = q.pair_a.second;
  Vertex b1 = q.pair_b.first;
  Vertex b2 = q.pair_b.second;

  // Pairs cross iff exactly one b lies on the open arc a1 -> a2.
  std::vector<Vertex> arc = ring_arc(n, a1, a2, +1);
  const auto on_arc = [&](Vertex v) { return std::find(arc.begin(), arc.end(), v) != arc.end(); };
  if (on_arc(b1) != on_arc(b2)) return no(rules::kCrossingPairs);

  // Walk so that the cyclic order is a1 [A] a2 [S1] b1 [B] b2 [S2].
  const int step = on_arc(b1) ? -1 : +1;
  if (ring_arc(n, a2, b2, step).size() < ring_arc(n, a2, b1, step).size()) std::swap(b1, b2);
  std::vector<Vertex> gaps[4] = {ring_arc(n, a1, a2, step), ring_arc(n, a2, b1, step), ring_arc(n, b1, b2, step),
                                 ring_arc(n, b2, a1, step)};
  for (int i = 0; i < 4; ++i) {
    if (gaps[i].empty() && gaps[(i + 1) % 4].empty()) return no(rules::kThreeConsecutive);
  }

  const Graph g = q.graph();
  auto path = [](Vertex from, const std::vector<Vertex>& inner, Vertex to) {
    std::vector<Vertex> out{from};
    out.insert(out.end(), inner.begin(), inner.end());
    out.push_back(to);
    return out;
  };
  if (!gaps[1].empty() && !gaps[3].empty()) {
    return yes(two_path_schedule(g, path(a1, gaps[0], a2), path(b1, gaps[2], b2)), rules::kNonCrossingPairs);
  }

  // One separating arc is empty; make it S1 by swapping the pair roles.
  if (!gaps[1].empty()) {
    std::swap(a1, b1);
    std::swap(a2, b2);
    std::swap(gaps[0], gaps[2]);
    std::swap(gaps[1], gaps[3]);
  }
  // Shrink to the six-ring a1 x a2 b1 y b2; Y on a ring vertex joins its
  // two ring neighbours.
  OpSequence ops;
  for (Vertex v : gaps[3]) ops.push_back(Op::y(v));
  for (std::size_t i = 1; i < gaps[0].size(); ++i) ops.push_back(Op::y(gaps[0][i]));
  for (std::size_t i = 1; i < gaps[2].size(); ++i) ops.push_back(Op::y(gaps[2][i]));
  std::vector<Vertex> rename(7, 0);
  const Vertex six[] = {a1, gaps[0][0], a2, b1, gaps[2][0], b2};
  for (int i = 0; i < 6; ++i) rename[i + 1] = six[i];
  for (const Op& op : relabel(six_ring_template(), rename)) ops.push_back(op);
  return yes(std::move(ops), rules::kNonCrossingPairs);
}

Decision decide_bell(const BellQuery& q) {
  switch (q.topology) {
    case Topology::Line:
      return decide_bell_line(q);
    case Topology::Ring:
      return decide_bell_ring(q);
    case Topology::Tree:
      return decide_bell_tree(q);
  }
  throw std::invalid_argument("unknown topology");
}

bool lemma_blockers(Topology topology, int n, std::pair<Vertex, Vertex> pair, Vertex b) {
  auto [a1, a2] = sorted(pair);
  switch (topology) {
    case Topology::Line:
      return a1 < b && b < a2;
    case Topology::Ring:
      return n >= 4 && ring_adjacent(n, a1, a2) && b != a1 && b != a2 &&
             (ring_adjacent(n, a1, b) || ring_adjacent(n, a2, b));
    case Topology::Tree:
      return false;
  }
  return false;
}

}  // namespace graphmin
