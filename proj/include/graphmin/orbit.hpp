#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphmin/graph.hpp"

namespace graphmin {

inline constexpr std::size_t kDefaultNodeBudget = std::size_t{1} << 20;

/// Canonical, label-sensitive serialization of a labeled graph: the alive
/// mask followed by the adjacency rows of the alive labels in ascending
/// order. Equal graphs have equal keys and vice versa.
struct OrbitKey {
  std::string bytes;

  /// Human-readable form: "1,2,3|1-2,2-3".
  std::string text;

  friend bool operator==(const OrbitKey& a, const OrbitKey& b) { return a.bytes == b.bytes; }
};

OrbitKey orbit_key(const Graph& g);

struct OrbitKeyHash {
  std::size_t operator()(const OrbitKey& k) const { return std::hash<std::string>{}(k.bytes); }
};

/// Thrown when an orbit closure grows past its node budget. Callers turn
/// this into an "unknown" answer rather than guessing.
class BudgetExhausted : public std::runtime_error {
 public:
  explicit BudgetExhausted(std::size_t budget);
  std::size_t budget() const { return budget_; }

 private:
  std::size_t budget_;
};

/// Breadth-first closure of a graph under local complementation. Members
/// are discovered in a deterministic order (vertices expanded in
/// ascending label order), and each member remembers the vertex whose
/// local complement first reached it.
class LcOrbit {
 public:
  static LcOrbit explore(const Graph& root, std::size_t node_budget = kDefaultNodeBudget);

  std::size_t size() const { return members_.size(); }
  const std::vector<Graph>& members() const { return members_; }
  const Graph& root() const { return members_.front(); }

  std::optional<std::size_t> find(const Graph& g) const;
  bool contains(const Graph& g) const { return find(g).has_value(); }

  /// Local complementations taking the root to member `index`.
  std::vector<Vertex> path_from_root(std::size_t index) const;

 private:
  std::vector<Graph> members_;
  std::vector<std::size_t> parent_;
  std::vector<Vertex> via_;
  std::unordered_map<OrbitKey, std::size_t, OrbitKeyHash> index_;
};

std::vector<Graph> lc_orbit(const Graph& g, std::size_t node_budget = kDefaultNodeBudget);

/// False immediately when the alive label sets differ.
bool lc_equivalent(const Graph& g, const Graph& h, std::size_t node_budget = kDefaultNodeBudget);

/// Local complementations taking g to h, if the two are LC-equivalent.
std::optional<std::vector<Vertex>> lc_path(const Graph& g, const Graph& h,
                                           std::size_t node_budget = kDefaultNodeBudget);

}  // namespace graphmin
