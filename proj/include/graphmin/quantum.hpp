#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphmin/graph.hpp"
#include "graphmin/lc_convention.hpp"

namespace graphmin {

inline constexpr int kMaxQubits = 12;
inline constexpr double kDefaultTolerance = 1e-10;

/// Amplitudes over the alive vertices of a graph. Qubit i is the i-th
/// smallest alive label and maps to bit i of the basis index.
struct StateVector {
  std::vector<Vertex> qubits;
  std::vector<convention::Complex> amplitudes;

  double norm() const;
  /// Bit position of a label; throws std::out_of_range if absent.
  int qubit_of(Vertex v) const;
};

/// Thrown when a graph exceeds kMaxQubits.
class QubitCapExceeded : public std::length_error {
 public:
  explicit QubitCapExceeded(int n);
};

/// |G>: CZ on every edge applied to |+> on every vertex.
StateVector graph_state(const Graph& g);

/// True iff a and b are equal up to a global phase, within `tolerance`
/// per amplitude. Different qubit lists compare unequal.
bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tolerance = kDefaultTolerance);

/// Applies a 2x2 matrix to one qubit.
void apply_single(StateVector& psi, Vertex qubit, const convention::Matrix2& m);

/// Checks |tau_a G> against sqrt(-iX)_a prod sqrt(iZ)_{N(a)} |G>.
bool verify_lc_unitary(const Graph& g, Vertex a, double tolerance = kDefaultTolerance);

enum class Basis { X, Y, Z };

std::string to_string(Basis b);
/// "X", "Y" or "Z" (case-insensitive); throws std::invalid_argument.
Basis parse_basis(const std::string& text);

/// Outcome of measuring one qubit of |G> and comparing the remainder with
/// the graph-state prediction.
struct MeasurementReport {
  bool passed = false;
  /// The outcome has probability zero; nothing to compare.
  bool vacuous = false;
  double probability = 0;
  /// Predicted graph on V \ a.
  Graph result;
  /// Non-identity single-qubit Cliffords C with (prod C) |post> ~ |result>,
  /// by label. Names are shortest words in H and S ("I", "H", "S", "HS",
  /// ...), applied right to left.
  std::vector<std::pair<Vertex, std::string>> correction;
};

/// Thrown when no local Clifford correction maps the post-measurement
/// state onto the predicted graph state.
class CorrectionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Projects qubit a onto the `outcome` (+1 or -1) eigenvector of `basis`
/// and compares with |B_a(G)>. For X the neighbor b picks the rewrite
/// (0: smallest neighbor). The correction may use any single-qubit
/// Clifford on N(a) and Paulis elsewhere; the search tries fewest
/// non-Pauli qubits first. For Z with outcome +1 only the identity is
/// accepted.
MeasurementReport verify_measurement(const Graph& g, Vertex a, Basis basis, int outcome, Vertex b = 0,
                                     double tolerance = kDefaultTolerance);

/// The 24 single-qubit Cliffords modulo phase, in breadth-first order of
/// their H/S words (identity first).
const std::vector<std::pair<std::string, convention::Matrix2>>& clifford_group();

}  // namespace graphmin
