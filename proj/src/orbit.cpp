#include "graphmin/orbit.hpp"

#include <algorithm>

namespace graphmin {

OrbitKey orbit_key(const Graph& g) {
  OrbitKey key;
  auto append_word = [&](std::uint64_t w) {
    for (int i = 0; i < 8; ++i) key.bytes.push_back(static_cast<char>((w >> (8 * i)) & 0xFF));
  };
  append_word(g.vertices().bits());
  for (Vertex v : g.vertices()) append_word(g.row(v));

  bool first = true;
  for (Vertex v : g.vertices()) {
    if (!first) key.text += ",";
    key.text += std::to_string(v);
    first = false;
  }
  key.text += "|";
  first = true;
  for (const Edge& e : g.edges()) {
    if (!first) key.text += ",";
    key.text += std::to_string(e.first) + "-" + std::to_string(e.second);
    first = false;
  }
  return key;
}

BudgetExhausted::BudgetExhausted(std::size_t budget)
    : std::runtime_error("LC orbit exceeded node budget " + std::to_string(budget)), budget_(budget) {}

namespace {

// Only the packed bytes take part in hashing and equality, so the
// human-readable text is skipped on the hot path.
OrbitKey fast_key(const Graph& g) {
  OrbitKey key;
  key.bytes.reserve(8 * (1 + static_cast<std::size_t>(g.order())));
  auto append_word = [&](std::uint64_t w) {
    for (int i = 0; i < 8; ++i) key.bytes.push_back(static_cast<char>((w >> (8 * i)) & 0xFF));
  };
  append_word(g.vertices().bits());
  for (Vertex v : g.vertices()) append_word(g.row(v));
  return key;
}

}  // namespace

LcOrbit LcOrbit::explore(const Graph& root, std::size_t node_budget) {
  LcOrbit orbit;
  orbit.members_.push_back(root);
  orbit.parent_.push_back(0);
  orbit.via_.push_back(0);
  orbit.index_.emplace(fast_key(root), 0);
  if (node_budget == 0) throw BudgetExhausted(node_budget);

  for (std::size_t head = 0; head < orbit.members_.size(); ++head) {
    for (Vertex v : orbit.members_[head].vertices()) {
      // Local complementation at a vertex of degree <= 1 is the identity.
      if (orbit.members_[head].degree(v) <= 1) continue;
      Graph next = local_complement(orbit.members_[head], v);
      auto [it, inserted] = orbit.index_.emplace(fast_key(next), orbit.members_.size());
      if (!inserted) continue;
      if (orbit.members_.size() >= node_budget) throw BudgetExhausted(node_budget);
      orbit.members_.push_back(std::move(next));
      orbit.parent_.push_back(head);
      orbit.via_.push_back(v);
    }
  }
  return orbit;
}

std::optional<std::size_t> LcOrbit::find(const Graph& g) const {
  auto it = index_.find(fast_key(g));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Vertex> LcOrbit::path_from_root(std::size_t index) const {
  std::vector<Vertex> path;
  while (index != 0) {
    path.push_back(via_[index]);
    index = parent_[index];
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Graph> lc_orbit(const Graph& g, std::size_t node_budget) {
  return LcOrbit::explore(g, node_budget).members();
}

bool lc_equivalent(const Graph& g, const Graph& h, std::size_t node_budget) {
  return lc_path(g, h, node_budget).has_value();
}

std::optional<std::vector<Vertex>> lc_path(const Graph& g, const Graph& h, std::size_t node_budget) {
  if (g.vertices() != h.vertices()) return std::nullopt;
  if (g == h) return std::vector<Vertex>{};
  // Cheap invariant: local complementation never changes the components.
  if (connected_components(g) != connected_components(h)) return std::nullopt;
  const LcOrbit orbit = LcOrbit::explore(g, node_budget);
  auto index = orbit.find(h);
  if (!index) return std::nullopt;
  return orbit.path_from_root(*index);
}

}  // namespace graphmin
