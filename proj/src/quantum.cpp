#include "graphmin/quantum.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>

#include "graphmin/ops.hpp"

namespace graphmin {

using convention::Complex;
using convention::Matrix2;

double StateVector::norm() const {
  double s = 0;
  for (const Complex& c : amplitudes) s += std::norm(c);
  return std::sqrt(s);
}

int StateVector::qubit_of(Vertex v) const {
  auto it = std::find(qubits.begin(), qubits.end(), v);
  if (it == qubits.end()) throw std::out_of_range("vertex " + std::to_string(v) + " is not a qubit of the state");
  return static_cast<int>(it - qubits.begin());
}

QubitCapExceeded::QubitCapExceeded(int n)
    : std::length_error("graph has " + std::to_string(n) + " vertices; the state-vector cap is " +
                        std::to_string(kMaxQubits)) {}

StateVector graph_state(const Graph& g) {
  if (g.order() > kMaxQubits) throw QubitCapExceeded(g.order());
  StateVector psi;
  psi.qubits = g.vertices().to_vector();
  const int n = static_cast<int>(psi.qubits.size());
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(psi.qubit_of(e.first), psi.qubit_of(e.second));
  const double magnitude = std::pow(2.0, -0.5 * n);
  psi.amplitudes.resize(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < psi.amplitudes.size(); ++idx) {
    int parity = 0;
    for (auto [i, j] : edges) parity ^= static_cast<int>((idx >> i) & (idx >> j) & 1U);
    psi.amplitudes[idx] = parity ? -magnitude : magnitude;
  }
  return psi;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tolerance) {
  if (a.qubits != b.qubits || a.amplitudes.size() != b.amplitudes.size()) return false;
  // Fix the phase on the largest amplitude of b.
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < b.amplitudes.size(); ++i) {
    if (std::abs(b.amplitudes[i]) > std::abs(b.amplitudes[pivot])) pivot = i;
  }
  if (std::abs(b.amplitudes[pivot]) <= tolerance) return a.norm() <= tolerance;
  const Complex phase = a.amplitudes[pivot] / b.amplitudes[pivot];
  if (std::abs(std::abs(phase) - 1.0) > tolerance) return false;
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i) {
    if (std::abs(a.amplitudes[i] - phase * b.amplitudes[i]) > tolerance) return false;
  }
  return true;
}

namespace {

void apply_on_bit(std::vector<Complex>& amps, int bit, const Matrix2& m) {
  const std::size_t mask = std::size_t{1} << bit;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) continue;
    const Complex lo = amps[i];
    const Complex hi = amps[i | mask];
    amps[i] = m[0] * lo + m[1] * hi;
    amps[i | mask] = m[2] * lo + m[3] * hi;
  }
}

Matrix2 mul(const Matrix2& a, const Matrix2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Matrix2 dagger(const Matrix2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

// |tr(A^dagger B)| == 2 for unitaries equal up to phase.
bool same_up_to_phase(const Matrix2& a, const Matrix2& b) {
  const Matrix2 p = mul(dagger(a), b);
  return std::abs(std::abs(p[0] + p[3]) - 2.0) < 1e-9;
}

}  // namespace

void apply_single(StateVector& psi, Vertex qubit, const Matrix2& m) {
  apply_on_bit(psi.amplitudes, psi.qubit_of(qubit), m);
}

bool verify_lc_unitary(const Graph& g, Vertex a, double tolerance) {
  g.require(a);
  StateVector psi = graph_state(g);
  apply_single(psi, a, convention::kSqrtMinusIX);
  for (Vertex b : g.neighbors(a)) apply_single(psi, b, convention::kSqrtIZ);
  return equal_up_to_phase(psi, graph_state(local_complement(g, a)), tolerance);
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::X:
      return "X";
    case Basis::Y:
      return "Y";
    case Basis::Z:
      return "Z";
  }
  return "?";
}

Basis parse_basis(const std::string& text) {
  if (text.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
      case 'X':
        return Basis::X;
      case 'Y':
        return Basis::Y;
      case 'Z':
        return Basis::Z;
    }
  }
  throw std::invalid_argument("unknown basis '" + text + "' (expected X, Y or Z)");
}

const std::vector<std::pair<std::string, Matrix2>>& clifford_group() {
  static const std::vector<std::pair<std::string, Matrix2>> group = [] {
    std::vector<std::pair<std::string, Matrix2>> out{{"I", convention::kIdentity}};
    for (std::size_t head = 0; head < out.size(); ++head) {
      for (const auto& [letter, gen] : {std::pair{"H", convention::kHadamard}, std::pair{"S", convention::kPhaseS}}) {
        const Matrix2 m = mul(gen, out[head].second);
        const bool known = std::any_of(out.begin(), out.end(), [&](const auto& e) { return same_up_to_phase(e.second, m); });
        if (!known) out.emplace_back(std::string(letter) + (head == 0 ? "" : out[head].first), m);
      }
    }
    return out;
  }();
  return group;
}

namespace {

// Which of X, Y, Z (0, 1, 2) the matrix equals up to sign.
int pauli_index(const Matrix2& m) {
  const Matrix2* paulis[] = {&convention::kPauliX, &convention::kPauliY, &convention::kPauliZ};
  for (int i = 0; i < 3; ++i) {
    if (same_up_to_phase(*paulis[i], m)) return i;
  }
  return -1;
}

// One Clifford per coset of the Pauli group, identity first.
const std::vector<Matrix2>& clifford_classes() {
  static const std::vector<Matrix2> reps = [] {
    std::vector<Matrix2> out;
    std::vector<std::pair<int, int>> seen;
    for (const auto& [name, c] : clifford_group()) {
      const std::pair<int, int> action{pauli_index(mul(dagger(c), mul(convention::kPauliX, c))),
                                       pauli_index(mul(dagger(c), mul(convention::kPauliZ, c)))};
      if (std::find(seen.begin(), seen.end(), action) != seen.end()) continue;
      seen.push_back(action);
      out.push_back(c);
    }
    return out;
  }();
  return reps;
}

std::string clifford_name(const Matrix2& m) {
  for (const auto& [name, c] : clifford_group()) {
    if (same_up_to_phase(c, m)) return name;
  }
  throw std::logic_error("matrix is not a single-qubit Clifford");
}

const Matrix2& eigenvector_projector_row(Basis basis, int outcome) {
  using convention::kInvSqrt2;
  // Conjugated eigenvector, i.e. the bra <e|, as (e0*, e1*, -, -).
  static const Matrix2 x_plus = {Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0), 0, 0};
  static const Matrix2 x_minus = {Complex(kInvSqrt2, 0), Complex(-kInvSqrt2, 0), 0, 0};
  static const Matrix2 y_plus = {Complex(kInvSqrt2, 0), Complex(0, -kInvSqrt2), 0, 0};
  static const Matrix2 y_minus = {Complex(kInvSqrt2, 0), Complex(0, kInvSqrt2), 0, 0};
  static const Matrix2 z_plus = {Complex(1, 0), Complex(0, 0), 0, 0};
  static const Matrix2 z_minus = {Complex(0, 0), Complex(1, 0), 0, 0};
  switch (basis) {
    case Basis::X:
      return outcome > 0 ? x_plus : x_minus;
    case Basis::Y:
      return outcome > 0 ? y_plus : y_minus;
    case Basis::Z:
      return outcome > 0 ? z_plus : z_minus;
  }
  return z_plus;
}

// <e|_a |psi>, qubit a traced out of the index space.
StateVector project_out(const StateVector& psi, Vertex a, const Matrix2& bra) {
  const int bit = psi.qubit_of(a);
  StateVector out;
  for (Vertex v : psi.qubits) {
    if (v != a) out.qubits.push_back(v);
  }
  out.amplitudes.resize(psi.amplitudes.size() / 2);
  const std::size_t low = (std::size_t{1} << bit) - 1;
  for (std::size_t j = 0; j < out.amplitudes.size(); ++j) {
    const std::size_t i0 = (j & low) | ((j & ~low) << 1);
    const std::size_t i1 = i0 | (std::size_t{1} << bit);
    out.amplitudes[j] = bra[0] * psi.amplitudes[i0] + bra[1] * psi.amplitudes[i1];
  }
  return out;
}

// Searches L (a Clifford class per qubit) such that psi is a +-1
// eigenvector of L^dagger K_v L for every stabiliser generator K_v of the
// target graph state.
class CorrectionSearch {
 public:
  CorrectionSearch(const StateVector& psi, const Graph& target, VertexSet free_qubits)
      : psi_(psi), target_(target), free_(free_qubits) {
    const int k = static_cast<int>(psi.qubits.size());
    choice_.assign(static_cast<std::size_t>(k), 0);
    // A generator is checkable once its highest qubit is assigned.
    checks_at_.resize(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) {
      const Vertex v = psi.qubits[static_cast<std::size_t>(q)];
      int last = q;
      for (Vertex u : target.neighbors(v)) last = std::max(last, psi.qubit_of(u));
      checks_at_[static_cast<std::size_t>(last)].push_back(v);
    }
    signs_.assign(static_cast<std::size_t>(k), 0);
  }

  bool run() {
    const int limit = free_.size();
    for (budget_ = 0; budget_ <= limit; ++budget_) {
      if (assign(0, 0)) return true;
    }
    return false;
  }

  const std::vector<int>& choice() const { return choice_; }
  const std::vector<int>& signs() const { return signs_; }

 private:
  bool assign(int q, int used) {
    if (q == static_cast<int>(choice_.size())) return used == budget_;
    const Vertex v = psi_.qubits[static_cast<std::size_t>(q)];
    const int options = free_.contains(v) ? static_cast<int>(clifford_classes().size()) : 1;
    for (int c = 0; c < options; ++c) {
      const int next_used = used + (c != 0 ? 1 : 0);
      if (next_used > budget_) break;
      choice_[static_cast<std::size_t>(q)] = c;
      if (checks_pass(q) && assign(q + 1, next_used)) return true;
    }
    choice_[static_cast<std::size_t>(q)] = 0;
    return false;
  }

  bool checks_pass(int q) {
    for (Vertex v : checks_at_[static_cast<std::size_t>(q)]) {
      StateVector moved = psi_;
      auto conjugated = [&](Vertex u, const Matrix2& pauli) {
        const Matrix2& l = clifford_classes()[static_cast<std::size_t>(choice_[static_cast<std::size_t>(psi_.qubit_of(u))])];
        apply_single(moved, u, mul(dagger(l), mul(pauli, l)));
      };
      conjugated(v, convention::kPauliX);
      for (Vertex u : target_.neighbors(v)) conjugated(u, convention::kPauliZ);
      Complex overlap = 0;
      for (std::size_t i = 0; i < moved.amplitudes.size(); ++i) {
        overlap += std::conj(psi_.amplitudes[i]) * moved.amplitudes[i];
      }
      if (std::abs(std::abs(overlap.real()) - 1.0) > 1e-8 || std::abs(overlap.imag()) > 1e-8) return false;
      signs_[static_cast<std::size_t>(psi_.qubit_of(v))] = overlap.real() < 0 ? 1 : 0;
    }
    return true;
  }

  const StateVector& psi_;
  const Graph& target_;
  VertexSet free_;
  std::vector<std::vector<Vertex>> checks_at_;
  std::vector<int> choice_;
  std::vector<int> signs_;
  int budget_ = 0;
};

}  // namespace

MeasurementReport verify_measurement(const Graph& g, Vertex a, Basis basis, int outcome, Vertex b,
                                     double tolerance) {
  g.require(a);
  if (outcome != 1 && outcome != -1) throw std::invalid_argument("outcome must be +1 or -1");
  if (g.order() > kMaxQubits) throw QubitCapExceeded(g.order());
  MeasurementReport report;
  switch (basis) {
    case Basis::Z:
      report.result = measure_z(g, a);
      break;
    case Basis::Y:
      report.result = measure_y(g, a);
      break;
    case Basis::X:
      report.result = b == 0 ? measure_x(g, a) : measure_x(g, a, b);
      break;
  }

  StateVector post = project_out(graph_state(g), a, eigenvector_projector_row(basis, outcome));
  const double norm = post.norm();
  report.probability = norm * norm;
  if (report.probability <= tolerance) {
    report.vacuous = true;
    report.passed = true;
    return report;
  }
  for (Complex& c : post.amplitudes) c /= norm;

  const StateVector target = graph_state(report.result);
  const VertexSet free_qubits = (basis == Basis::Z && outcome > 0) ? VertexSet{} : g.neighbors(a);
  CorrectionSearch search(post, report.result, free_qubits);
  if (!search.run()) {
    throw CorrectionNotFound("no local Clifford correction after " + to_string(basis) + " on vertex " +
                             std::to_string(a) + " of " + to_string(g));
  }
  for (std::size_t q = 0; q < post.qubits.size(); ++q) {
    Matrix2 c = clifford_classes()[static_cast<std::size_t>(search.choice()[q])];
    if (search.signs()[q]) c = mul(convention::kPauliZ, c);
    apply_single(post, post.qubits[q], c);
    const std::string name = clifford_name(c);
    if (name != "I") report.correction.emplace_back(post.qubits[q], name);
  }
  report.passed = equal_up_to_phase(post, target, tolerance);
  if (basis == Basis::Z && outcome > 0 && !report.correction.empty()) report.passed = false;
  return report;
}

}  // namespace graphmin
