#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "graphmin/quantum.hpp"
#include "support/oracles.hpp"

using namespace graphmin;

namespace {

Graph four_vertex() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}, {1, 3}}); }

}  // namespace

TEST(GraphState, SmallStates) {
  const StateVector plus = graph_state(Graph(1));
  ASSERT_EQ(plus.amplitudes.size(), 2u);
  EXPECT_NEAR(plus.amplitudes[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(plus.amplitudes[1].real(), 1 / std::sqrt(2.0), 1e-15);

  const StateVector k2 = graph_state(Graph::from_edges(2, {{1, 2}}));
  const double expected[] = {0.5, 0.5, 0.5, -0.5};
  for (int i = 0; i < 4; ++i) EXPECT_DOUBLE_EQ(k2.amplitudes[static_cast<std::size_t>(i)].real(), expected[i]);
}

TEST(GraphState, SignsFollowEdgeParity) {
  const Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}});
  const StateVector psi = graph_state(g);
  ASSERT_EQ(psi.amplitudes.size(), 16u);
  for (std::size_t idx = 0; idx < 16; ++idx) {
    auto bit = [&](Vertex v) { return static_cast<int>((idx >> (v - 1)) & 1U); };
    const int parity = (bit(1) & bit(2)) ^ (bit(2) & bit(3)) ^ (bit(2) & bit(4));
    EXPECT_DOUBLE_EQ(psi.amplitudes[idx].real(), parity ? -0.25 : 0.25);
    EXPECT_DOUBLE_EQ(psi.amplitudes[idx].imag(), 0.0);
  }
  EXPECT_NEAR(psi.norm(), 1.0, 1e-12);
}

TEST(GraphState, CapIsEnforced) {
  EXPECT_THROW(graph_state(Graph(kMaxQubits + 1)), QubitCapExceeded);
  EXPECT_NO_THROW(graph_state(Graph(kMaxQubits)));
}

TEST(CliffordGroup, HasTwentyFourDistinctElements) {
  const auto& group = clifford_group();
  ASSERT_EQ(group.size(), 24u);
  EXPECT_EQ(group.front().first, "I");
  EXPECT_EQ(group[1].first, "H");
  EXPECT_EQ(group[2].first, "S");
}

TEST(LcUnitary, Examples) {
  EXPECT_TRUE(verify_lc_unitary(four_vertex(), 2));
  EXPECT_TRUE(verify_lc_unitary(Graph::from_edges(3, {{1, 2}}), 3));
  EXPECT_THROW(verify_lc_unitary(four_vertex(), 7), std::out_of_range);
}

TEST(LcUnitary, RandomGraphs) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.5);
    for (Vertex a : g.vertices()) EXPECT_TRUE(verify_lc_unitary(g, a)) << to_string(g) << " at " << a;
  }
}

TEST(LcUnitary, DetectsAWrongGraph) {
  // The tolerance check is not vacuous: a different graph fails.
  StateVector psi = graph_state(four_vertex());
  EXPECT_FALSE(equal_up_to_phase(psi, graph_state(Graph::from_edges(4, {{1, 2}}))));
  apply_single(psi, 1, convention::kPauliZ);
  EXPECT_FALSE(equal_up_to_phase(psi, graph_state(four_vertex())));
}

TEST(Measurement, FourVertexPanels) {
  const Graph g = four_vertex();
  const MeasurementReport z = verify_measurement(g, 2, Basis::Z, +1);
  EXPECT_TRUE(z.passed);
  EXPECT_TRUE(z.correction.empty());
  EXPECT_EQ(z.result.edges(), (EdgeSet{{1, 3}}));
  EXPECT_NEAR(z.probability, 0.5, 1e-12);

  const MeasurementReport y = verify_measurement(g, 2, Basis::Y, +1);
  EXPECT_TRUE(y.passed);
  EXPECT_EQ(y.result.edges(), (EdgeSet{{1, 4}, {3, 4}}));

  const MeasurementReport x = verify_measurement(g, 2, Basis::X, -1, 1);
  EXPECT_TRUE(x.passed);
  EXPECT_EQ(x.result.edges(), (EdgeSet{{1, 3}, {1, 4}, {3, 4}}));
  EXPECT_FALSE(x.correction.empty());
}

TEST(Measurement, SingleVertex) {
  const MeasurementReport r = verify_measurement(Graph(1), 1, Basis::Z, +1);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.result.empty());
}

TEST(Measurement, IsolatedXMinusHasZeroProbability) {
  const MeasurementReport r = verify_measurement(Graph(2), 1, Basis::X, -1);
  EXPECT_TRUE(r.vacuous);
  EXPECT_TRUE(r.passed);
}

TEST(Measurement, BothOutcomesAllBasesRandom) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
    for (Vertex a : g.vertices()) {
      for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
        for (int outcome : {1, -1}) {
          const MeasurementReport r = verify_measurement(g, a, b, outcome);
          EXPECT_TRUE(r.passed) << to_string(g) << " " << to_string(b) << outcome << " at " << a;
        }
      }
      for (Vertex nb : g.neighbors(a)) EXPECT_TRUE(verify_measurement(g, a, Basis::X, 1, nb).passed);
    }
  }
}

TEST(Measurement, InputErrors) {
  EXPECT_THROW(verify_measurement(four_vertex(), 2, Basis::Z, 0), std::invalid_argument);
  EXPECT_THROW(parse_basis("W"), std::invalid_argument);
  EXPECT_EQ(parse_basis("y"), Basis::Y);
}
