#include <gtest/gtest.h>

#include <random>

#include "graphmin/foliage.hpp"
#include "graphmin/orbit.hpp"
#include "support/oracles.hpp"

using namespace graphmin;

namespace {

Graph fig4() { return Graph::from_edges(8, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}, {7, 8}}); }

Partition from_sets(const std::vector<std::set<Vertex>>& sets) {
  std::vector<VertexSet> blocks;
  for (const auto& s : sets) {
    VertexSet b;
    for (Vertex v : s) b.insert(v);
    blocks.push_back(b);
  }
  return Partition(blocks);
}

// A random refinement of the canonical partition.
Partition random_refinement(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexSet> blocks;
  const Partition canonical = canonical_foliage_partition(g);
  for (VertexSet b : canonical.blocks()) {
    std::vector<VertexSet> parts(1 + rng() % static_cast<std::uint64_t>(b.size()));
    for (Vertex v : b) parts[rng() % parts.size()].insert(v);
    for (VertexSet p : parts) {
      if (!p.empty()) blocks.push_back(p);
    }
  }
  return Partition(blocks);
}

}  // namespace

TEST(FoliageSets, Examples) {
  EXPECT_EQ(foliage_set(fig4()), (VertexSet{1, 2, 3, 4, 5, 7, 8}));

  const Graph k2 = Graph::from_edges(2, {{1, 2}});
  EXPECT_EQ(leaves_axils(k2), (LeafAxilSet{{1, 2}, {2, 1}}));
  EXPECT_TRUE(twins(k2).empty());

  const Graph star = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(leaves_axils(star), (LeafAxilSet{{2, 1}, {3, 1}, {4, 1}}));
  EXPECT_EQ(twins(star), (TwinSet{{2, 3}, {2, 4}, {3, 4}}));
}

TEST(FoliageEquivalence, Examples) {
  const Graph g = fig4();
  EXPECT_TRUE(foliage_equivalent(g, 1, 2));
  EXPECT_FALSE(foliage_equivalent(g, 1, 5));
  EXPECT_TRUE(foliage_equivalent(g, 6, 6));
  EXPECT_TRUE(foliage_equivalent(g, 4, 5));
  EXPECT_FALSE(foliage_equivalent(g, 5, 6));
  EXPECT_THROW(foliage_equivalent(g, 9, 1), std::out_of_range);
}

TEST(CanonicalPartition, Examples) {
  EXPECT_EQ(canonical_foliage_partition(fig4()).to_string(), "{{1,2,3},{4,5},{6},{7,8}}");
  EXPECT_EQ(canonical_foliage_partition(Graph(4)), Partition::singletons(VertexSet::range(4)));
  EXPECT_EQ(canonical_foliage_partition(line_graph(4)).to_string(), "{{1,2},{3,4}}");
}

TEST(CanonicalPartition, AgreesWithTransitiveClosureOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 9), 0.1 + 0.1 * (trial % 6));
    EXPECT_EQ(canonical_foliage_partition(g), from_sets(oracle::classes(oracle::from_graph(g)))) << to_string(g);
  }
}

// Each combination of relations meeting at a shared vertex stays inside a
// class: the relation is transitive on these hand-built cases.
TEST(CanonicalPartition, TransitivityCases) {
  struct Case {
    const char* name;
    Graph g;
    VertexSet cls;
  };
  const std::vector<Case> cases = {
      {"twin+twin", Graph::from_edges(5, {{1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {3, 5}}), VertexSet{1, 2, 3}},
      {"twin+twin clique", Graph::from_edges(4, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}),
       VertexSet{1, 2, 3, 4}},
      {"three leaves on one axil", Graph::from_edges(4, {{1, 3}, {2, 3}, {3, 4}}), VertexSet{1, 2, 3, 4}},
      {"leaf and axil of a K2", Graph::from_edges(2, {{1, 2}}), VertexSet{1, 2}},
      {"twin leaves share an axil", Graph::from_edges(5, {{1, 3}, {2, 3}, {3, 4}, {4, 5}}), VertexSet{1, 2, 3}},
      {"path end pairs", line_graph(5), VertexSet{1, 2}},
  };
  for (const auto& c : cases) {
    const Partition p = canonical_foliage_partition(c.g);
    EXPECT_EQ(p.blocks()[p.block_of(c.cls.min())], c.cls) << c.name;
    for (Vertex v : c.cls) {
      for (Vertex w : c.cls) EXPECT_TRUE(foliage_equivalent(c.g, v, w)) << c.name << " " << v << "," << w;
    }
  }
}

TEST(CanonicalPartition, LcCaseAnalysis) {
  // LC at an axil turns the leaf-axil pair into twins.
  const Graph g = Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}});
  const Graph t = local_complement(g, 2);
  ASSERT_TRUE(g.neighbors(1) == VertexSet{2});
  EXPECT_TRUE(is_twin_pair(t, 1, 2));
  EXPECT_EQ(canonical_foliage_partition(t), canonical_foliage_partition(g));

  // LC at a common neighbour toggles the twin edge and keeps twinness.
  const Graph h = Graph::from_edges(4, {{1, 3}, {2, 3}, {3, 4}, {1, 4}, {2, 4}});
  ASSERT_TRUE(is_twin_pair(h, 1, 2));
  const Graph u = local_complement(h, 3);
  EXPECT_NE(h.adjacent(1, 2), u.adjacent(1, 2));
  EXPECT_TRUE(is_twin_pair(u, 1, 2));
}

TEST(CanonicalPartition, LcInvariantOnRandomGraphs) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.35);
    const Partition p = canonical_foliage_partition(g);
    for (Vertex a : g.vertices()) EXPECT_EQ(canonical_foliage_partition(local_complement(g, a)), p);
  }
}

TEST(IsFoliagePartition, Examples) {
  const Graph g = fig4();
  EXPECT_TRUE(is_foliage_partition(
      g, Partition({VertexSet{1, 2}, VertexSet{3}, VertexSet{4, 5}, VertexSet{6}, VertexSet{7, 8}})));
  EXPECT_TRUE(is_foliage_partition(g, Partition::singletons(g.vertices())));
  EXPECT_FALSE(is_foliage_partition(
      g, Partition({VertexSet{1, 2, 3}, VertexSet{4}, VertexSet{5, 6}, VertexSet{7, 8}})));
  EXPECT_THROW(is_foliage_partition(g, Partition({VertexSet{1, 2, 3}})), std::invalid_argument);
  EXPECT_THROW(Partition({VertexSet{1, 2}, VertexSet{2, 3}}), std::invalid_argument);
}

TEST(IsFoliagePartition, MergingInequivalentVerticesFails) {
  std::mt19937_64 rng(33);
  int merges = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.4);
    const Partition p = canonical_foliage_partition(g);
    if (p.size() < 2) continue;
    std::vector<VertexSet> blocks = p.blocks();
    const std::size_t i = rng() % blocks.size();
    std::size_t j = rng() % blocks.size();
    if (i == j) j = (j + 1) % blocks.size();
    blocks[i] = blocks[i] | blocks[j];
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
    EXPECT_FALSE(is_foliage_partition(g, Partition(blocks)));
    ++merges;
  }
  EXPECT_GT(merges, 100);
}

TEST(FoliageGraph, Examples) {
  const Graph g = fig4();
  const FoliageGraph f = foliage_graph(g, canonical_foliage_partition(g));
  // Blocks are 1:{1,2,3} 2:{4,5} 3:{6} 4:{7,8}.
  EXPECT_EQ(f.graph, Graph::from_edges(4, {{1, 2}, {2, 3}}));
  EXPECT_EQ(f.labeled(), Graph::from_edges(8, VertexSet{1, 4, 6, 7}, EdgeSet{{1, 4}, {4, 6}}));

  const FoliageGraph f2 = nth_foliage_graph(g, 2);
  EXPECT_EQ(f2.blocks.to_string(), "{{1,2,3,4,5,6},{7,8}}");
  EXPECT_EQ(f2.graph, Graph(2));

  EXPECT_EQ(foliage_graph(g, Partition::singletons(g.vertices())).labeled(), g);
  EXPECT_THROW(foliage_graph(g, canonical_foliage_partition(g), std::vector<Vertex>{1, 4, 5, 7}),
               std::invalid_argument);
  EXPECT_THROW(nth_foliage_graph(g, 0), std::invalid_argument);
}

TEST(FoliageGraph, QuotientMatchesOracle) {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.35);
    const Partition w = random_refinement(g, rng);
    std::vector<std::set<Vertex>> sets;
    for (VertexSet b : w.blocks()) {
      std::vector<Vertex> v = b.to_vector();
      sets.emplace_back(v.begin(), v.end());
    }
    EXPECT_EQ(foliage_graph(g, w).graph, oracle::to_graph(oracle::quotient(oracle::from_graph(g), sets)));
  }
}

TEST(LiftedLocalComplement, Examples) {
  const Graph g = fig4();
  const Partition w = canonical_foliage_partition(g);
  EXPECT_NO_THROW(lifted_local_complement(g, w, 3));
  // Star axil whose neighbours other than the leaves are outside: still
  // commutes; with all neighbours inside the block nothing changes.
  const Graph star = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  const Partition ws = canonical_foliage_partition(star);
  EXPECT_EQ(lifted_local_complement(star, ws, 1).graph, foliage_graph(star, ws).graph);
  EXPECT_THROW(lifted_local_complement(g, w, 7), std::invalid_argument);
}

TEST(LiftedLocalComplement, RandomRefinements) {
  std::mt19937_64 rng(35);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.4);
    const Partition w = random_refinement(g, rng);
    for (Vertex a : g.vertices()) {
      if (g.degree(a) <= 1) continue;
      EXPECT_NO_THROW(lifted_local_complement(g, w, a));
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(ClassifyBlock, Examples) {
  const Graph g = fig4();
  const BlockShape star = classify_block(g, VertexSet{1, 2, 3});
  EXPECT_EQ(star.kind, BlockKind::Star);
  EXPECT_EQ(star.axil, 3);
  EXPECT_EQ(classify_block(g, VertexSet{6}).kind, BlockKind::Singleton);
  EXPECT_EQ(classify_block(g, VertexSet{4, 5}).kind, BlockKind::Clique);
  EXPECT_EQ(classify_block(g, VertexSet{7, 8}).kind, BlockKind::Star);

  const Graph fig6 =
      Graph::from_edges(8, {{1, 3}, {2, 3}, {3, 7}, {3, 8}, {4, 5}, {4, 6}, {5, 6}, {4, 7}, {4, 8}, {5, 7}, {5, 8}});
  EXPECT_EQ(classify_block(fig6, VertexSet{7, 8}).kind, BlockKind::Anticlique);
  EXPECT_THROW(classify_block(line_graph(4), VertexSet{1, 4}), std::invalid_argument);
  // A two-vertex leaf-axil block reports the non-leaf as axil.
  EXPECT_EQ(classify_block(line_graph(4), VertexSet{3, 4}).axil, 3);
}
