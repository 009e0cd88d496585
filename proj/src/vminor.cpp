#include "graphmin/vminor.hpp"

#include <algorithm>
#include <stdexcept>

namespace graphmin {

std::string to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes:
      return "yes";
    case Answer::No:
      return "no";
    case Answer::Unknown:
      return "unknown";
  }
  return "?";
}

std::string to_string(Persistence p) {
  switch (p) {
    case Persistence::Equivalent:
      return "equivalent";
    case Persistence::AllIsolated:
      return "all-isolated";
    case Persistence::Empty:
      return "empty";
    case Persistence::Violation:
      return "violation";
  }
  return "?";
}

namespace {

// Depth-first over basis choices Z, Y, X per vertex, so the first hit is
// the smallest branch index with the first measured vertex most
// significant.
bool search_measurements(const Graph& current, const std::vector<Vertex>& order, std::size_t depth,
                         const LcOrbit& target_orbit, OpSequence& ops) {
  if (depth == order.size()) {
    auto index = target_orbit.find(current);
    if (!index) return false;
    // The orbit path goes target -> current; local complementations are
    // involutions, so the reversed path goes current -> target.
    std::vector<Vertex> path = target_orbit.path_from_root(*index);
    std::reverse(path.begin(), path.end());
    for (Vertex v : path) ops.push_back(Op::lc(v));
    return true;
  }
  const Vertex v = order[depth];

  ops.push_back(Op::z(v));
  if (search_measurements(measure_z(current, v), order, depth + 1, target_orbit, ops)) return true;
  ops.back() = Op::y(v);
  if (search_measurements(measure_y(current, v), order, depth + 1, target_orbit, ops)) return true;
  const Vertex b = default_x_neighbor(current, v);
  ops.back() = Op::x(v, b);
  // X on an isolated vertex coincides with Z, already explored.
  if (b != 0 && search_measurements(measure_x(current, v, b), order, depth + 1, target_orbit, ops)) return true;
  ops.pop_back();
  return false;
}

void require_subset(const Graph& g, const Graph& h) {
  if (!h.vertices().is_subset_of(g.vertices())) {
    throw std::invalid_argument("target labels " + h.vertices().to_string() + " are not a subset of source labels " +
                                g.vertices().to_string());
  }
}

bool has_isolated_vertex(const Graph& g) {
  for (Vertex v : g.vertices()) {
    if (g.neighbors(v).empty()) return true;
  }
  return false;
}

}  // namespace

Decision decide_vertex_minor(const Graph& g, const Graph& h, std::size_t node_budget) {
  require_subset(g, h);
  LcOrbit target_orbit;
  try {
    target_orbit = LcOrbit::explore(h, node_budget);
  } catch (const BudgetExhausted&) {
    return {Answer::Unknown, {}, rules::kBudgetExhausted};
  }
  const std::vector<Vertex> order = (g.vertices() - h.vertices()).to_vector();
  OpSequence ops;
  if (search_measurements(g, order, 0, target_orbit, ops)) return {Answer::Yes, std::move(ops), rules::kBruteForce};
  return {Answer::No, {}, rules::kBruteForce};
}

Reduction source_reduce(const Graph& g, VertexSet protected_vertices) {
  Reduction out{g, {}};
  Graph& cur = out.graph;
  for (;;) {
    const VertexSet free = cur.vertices() - protected_vertices;

    Vertex twin = 0;
    for (auto [a, b] : twins(cur)) {
      for (Vertex v : {a, b}) {
        if (free.contains(v) && (twin == 0 || v < twin)) twin = v;
      }
    }
    if (twin != 0) {
      cur.erase_vertex(twin);
      out.ops.push_back(Op::del(twin));
      continue;
    }

    Vertex leaf = 0;
    Vertex axil = 0;
    Vertex axil_leaf = 0;
    for (auto [l, a] : leaves_axils(cur)) {
      if (free.contains(l) && (leaf == 0 || l < leaf)) leaf = l;
      if (free.contains(a) && (axil == 0 || a < axil || (a == axil && l < axil_leaf))) {
        axil = a;
        axil_leaf = l;
      }
    }
    if (leaf != 0) {
      cur.erase_vertex(leaf);
      out.ops.push_back(Op::del(leaf));
      continue;
    }
    if (axil != 0) {
      cur.complement_neighborhood(axil);
      cur.complement_neighborhood(axil_leaf);
      cur.erase_vertex(axil);
      out.ops.push_back(Op::lc(axil));
      out.ops.push_back(Op::lc(axil_leaf));
      out.ops.push_back(Op::del(axil));
      continue;
    }
    return out;
  }
}

Reduction source_reduce(const Graph& g, const Graph& target) {
  require_subset(g, target);
  if (has_isolated_vertex(target)) {
    throw std::invalid_argument("source reduction needs a target without isolated vertices");
  }
  return source_reduce(g, target.vertices());
}

Reduction extract_foliage_graph(const Graph& g, const Partition& w, const std::vector<Vertex>& representatives) {
  const Graph expected = foliage_graph(g, w, representatives).labeled();
  Reduction out{g, {}};
  Graph& cur = out.graph;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const VertexSet block = w.blocks()[i];
    const Vertex rep = representatives[i];
    const BlockShape shape = classify_block(cur, block);
    if (shape.kind == BlockKind::Singleton) continue;
    if (shape.kind == BlockKind::Star && shape.axil != rep) {
      // Swaps the roles of the axil and the representative.
      cur.complement_neighborhood(shape.axil);
      cur.complement_neighborhood(rep);
      out.ops.push_back(Op::lc(shape.axil));
      out.ops.push_back(Op::lc(rep));
    }
    for (Vertex v : block - VertexSet{rep}) {
      cur.erase_vertex(v);
      out.ops.push_back(Op::del(v));
    }
  }
  if (!(cur == expected)) {
    throw std::logic_error("foliage graph extraction produced " + to_string(cur) + ", expected " +
                           to_string(expected));
  }
  return out;
}

Reduction foliage_source_reduce(const Graph& g, const Graph& h, const Partition& w,
                                const std::vector<Vertex>& representatives) {
  require_subset(g, h);
  const VertexSet reps{std::span<const Vertex>(representatives)};
  if (!h.vertices().is_subset_of(reps)) {
    throw std::invalid_argument("target labels " + h.vertices().to_string() + " are not all representatives " +
                                reps.to_string());
  }
  if (has_isolated_vertex(h)) {
    throw std::invalid_argument("foliage source reduction needs a target without isolated vertices");
  }
  return extract_foliage_graph(g, w, representatives);
}

Persistence class_persistence_check(const Graph& g, const Graph& h, VertexSet a) {
  if (!a.is_subset_of(g.vertices())) {
    throw std::invalid_argument("set " + a.to_string() + " is not inside the source graph");
  }
  auto pairwise = [](const Graph& graph, VertexSet s) {
    for (Vertex v : s) {
      for (Vertex u : s) {
        if (v < u && !foliage_equivalent(graph, v, u)) return false;
      }
    }
    return true;
  };
  if (!pairwise(g, a)) {
    throw std::invalid_argument("set " + a.to_string() + " is not pairwise foliage-equivalent");
  }
  const VertexSet kept = a & h.vertices();
  if (kept.empty()) return Persistence::Empty;
  if (pairwise(h, kept)) return Persistence::Equivalent;
  const bool isolated = std::all_of(kept.begin(), kept.end(), [&](Vertex v) { return h.neighbors(v).empty(); });
  return isolated ? Persistence::AllIsolated : Persistence::Violation;
}

namespace {

Reduction reduce_pair(const Graph& g, Vertex v, Vertex w) {
  Reduction out{g, {}};
  const bool v_leaf_of_w = g.neighbors(v) == VertexSet{w};
  const bool w_leaf_of_v = g.neighbors(w) == VertexSet{v};
  if (v_leaf_of_w || is_twin_pair(g, v, w)) {
    out.graph.erase_vertex(v);
    out.ops.push_back(Op::del(v));
  } else if (w_leaf_of_v) {
    out.graph.complement_neighborhood(v);
    out.graph.complement_neighborhood(w);
    out.graph.erase_vertex(v);
    out.ops = {Op::lc(v), Op::lc(w), Op::del(v)};
  } else {
    throw std::invalid_argument("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                " are not foliage-equivalent");
  }
  return out;
}

}  // namespace

ReducedPair target_reduce(const Graph& g, const Graph& h, Vertex v, Vertex w) {
  if (v == w) throw std::invalid_argument("target reduction needs two distinct vertices");
  for (const Graph* graph : {&g, &h}) {
    graph->require(v);
    graph->require(w);
    if (!foliage_equivalent(*graph, v, w)) {
      throw std::invalid_argument("vertices " + std::to_string(v) + " and " + std::to_string(w) +
                                  " are not foliage-equivalent in " + to_string(*graph));
    }
  }
  return {reduce_pair(g, v, w), reduce_pair(h, v, w)};
}

ReducedPair foliage_target_reduce(const Graph& g, const Graph& h, const Partition& target_partition,
                                  const std::vector<Vertex>& target_representatives) {
  require_subset(g, h);
  if (!is_foliage_partition(h, target_partition)) {
    throw std::invalid_argument("partition " + target_partition.to_string() + " is not a foliage partition of the target");
  }
  std::vector<VertexSet> lifted = target_partition.blocks();
  for (Vertex v : g.vertices() - h.vertices()) lifted.push_back(VertexSet{v});
  const Partition source_partition(std::move(lifted));
  if (!is_foliage_partition(g, source_partition)) {
    throw std::invalid_argument("lifted partition " + source_partition.to_string() +
                                " is not a foliage partition of the source");
  }

  // Representatives of the lifted partition, in its block order.
  std::vector<Vertex> source_representatives;
  for (VertexSet block : source_partition.blocks()) {
    if (block.size() == 1 && !h.contains(block.min())) {
      source_representatives.push_back(block.min());
    } else {
      source_representatives.push_back(target_representatives.at(target_partition.block_of(block.min())));
    }
  }
  return {extract_foliage_graph(g, source_partition, source_representatives),
          extract_foliage_graph(h, target_partition, target_representatives)};
}

}  // namespace graphmin
