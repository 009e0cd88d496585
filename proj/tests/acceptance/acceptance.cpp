// One PASS/FAIL line per criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "graphmin/bell.hpp"
#include "graphmin/foliage.hpp"
#include "graphmin/io.hpp"
#include "graphmin/orbit.hpp"
#include "graphmin/quantum.hpp"
#include "graphmin/vminor.hpp"
#include "support/oracles.hpp"

using namespace graphmin;

namespace {

const std::filesystem::path kFixtures = GRAPHMIN_FIXTURES_DIR;

struct Tally {
  long checked = 0;
  long failed = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
};

// Every yes from criteria 1 to 4 is recorded here and replayed for 9.
struct YesRecord {
  Graph source;
  OpSequence witness;
  Graph target;
};
std::vector<YesRecord> yes_log;

std::string fixture(const std::string& rel) { return read_file((kFixtures / rel).string()); }
Graph fixture_graph(const std::string& rel) { return parse_edge_list(fixture(rel)); }

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

void log_if_yes(const Graph& source, const Decision& d, const Graph& target) {
  if (d.answer == Answer::Yes) yes_log.push_back({source, d.witness, target});
}

// ---- 1

Tally fixtures() {
  Tally t;
  const Graph g2 = fixture_graph("fig2/source.edges");
  t.expect(write_edge_list(local_complement(g2, 2)) == fixture("fig2/lc2.edges"), "fig2 lc");

  const Graph g3 = fixture_graph("fig3/source.edges");
  t.expect(write_edge_list(measure_z(g3, 2)) == fixture("fig3/z2.edges"), "fig3 z");
  t.expect(write_edge_list(measure_y(g3, 2)) == fixture("fig3/y2.edges"), "fig3 y");
  t.expect(write_edge_list(measure_x(g3, 2)) == fixture("fig3/x2.edges"), "fig3 x");

  const Graph g4 = fixture_graph("fig4/source.edges");
  const Partition p4 = canonical_foliage_partition(g4);
  std::string blocks;
  for (VertexSet b : p4.blocks()) blocks += (blocks.empty() ? "" : " ") + b.to_string();
  t.expect(blocks + "\n" == fixture("fig4/partition.txt"), "fig4 partition " + blocks);
  t.expect(write_edge_list(foliage_graph(g4, p4).labeled()) == fixture("fig4/foliage.edges"), "fig4 F(G)");
  t.expect(write_edge_list(nth_foliage_graph(g4, 2).labeled()) == fixture("fig4/foliage2.edges"), "fig4 F2(G)");

  const Graph g6 = fixture_graph("fig6/source.edges");
  const Reduction r6 = extract_foliage_graph(g6, canonical_foliage_partition(g6), {2, 4, 6, 8});
  t.expect(write_edge_list(r6.graph) == fixture("fig6/reduced.edges"), "fig6 reduced");
  t.expect(write_edge_list(replay(g6, r6.ops)) == fixture("fig6/reduced.edges"), "fig6 replay");

  for (const char* dir : {"fig7a", "fig7b"}) {
    const std::string d = dir;
    const ReducedPair r = target_reduce(fixture_graph(d + "/source.edges"), fixture_graph(d + "/target.edges"), 5, 4);
    t.expect(write_edge_list(r.source.graph) == fixture(d + "/reduced_source.edges"), d + " source");
    t.expect(write_edge_list(r.target.graph) == fixture(d + "/reduced_target.edges"), d + " target");
  }

  for (const std::string& line : data_lines(fixture("fig8/queries.txt"))) {
    std::istringstream in(line);
    int n;
    Vertex a1, a2, b1, b2;
    std::string expected, rule;
    in >> n >> a1 >> a2 >> b1 >> b2 >> expected >> rule;
    const BellQuery q{Topology::Line, n, {}, {a1, a2}, {b1, b2}};
    const Decision d = decide_bell(q);
    t.expect(to_string(d.answer) == expected && d.rule == rule, "fig8 " + line);
    log_if_yes(q.graph(), d, q.target());
  }

  {
    std::istringstream in(data_lines(fixture("fig9/query.txt")).at(0));
    int n;
    Vertex a1, a2, b1, b2;
    in >> n >> a1 >> a2 >> b1 >> b2;
    const BellQuery q{Topology::Ring, n, {}, {a1, a2}, {b1, b2}};
    const Decision d = decide_bell(q);
    t.expect(d.answer == Answer::Yes, "fig9 answer");
    t.expect(write_edge_list(replay(q.graph(), d.witness)) == fixture("fig9/expected.edges"), "fig9 replay");
    log_if_yes(q.graph(), d, q.target());
  }
  return t;
}

// ---- 2, 3, 4

void sweep_placements(int n, const std::function<void(std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>)>& f) {
  // a1 is the smallest of the four; each 4-set gives three pairings, each
  // queried with both pair orders.
  for (Vertex a1 = 1; a1 <= n; ++a1) {
    for (Vertex a2 = a1 + 1; a2 <= n; ++a2) {
      for (Vertex b1 = a1 + 1; b1 <= n; ++b1) {
        for (Vertex b2 = b1 + 1; b2 <= n; ++b2) {
          if (b1 == a2 || b2 == a2) continue;
          f({a1, a2}, {b1, b2});
          f({b1, b2}, {a1, a2});
        }
      }
    }
  }
}

Tally bell_sweep(Topology topology, const Graph* tree_graph, int n, Tally& t) {
  sweep_placements(n, [&](auto a, auto b) {
    const BellQuery q{topology, n, tree_graph ? *tree_graph : Graph{}, a, b};
    const Decision fast = decide_bell(q);
    const Decision brute = decide_vertex_minor(q.graph(), q.target());
    std::ostringstream what;
    what << to_string(topology) << " n=" << n << " {" << a.first << "," << a.second << "} {" << b.first << ","
         << b.second << "}";
    if (tree_graph) what << " tree " << to_string(*tree_graph);
    t.expect(brute.answer != Answer::Unknown && fast.answer == brute.answer, what.str());
    log_if_yes(q.graph(), fast, q.target());
    log_if_yes(q.graph(), brute, q.target());
  });
  return t;
}

Tally line_sweep() {
  Tally t;
  for (int n = 4; n <= 8; ++n) bell_sweep(Topology::Line, nullptr, n, t);
  return t;
}

Tally ring_sweep() {
  Tally t;
  for (int n = 4; n <= 8; ++n) bell_sweep(Topology::Ring, nullptr, n, t);
  return t;
}

Tally tree_sweep() {
  Tally t;
  for (int n = 4; n <= 6; ++n) {
    for (const Graph& tree : oracle::all_trees(n)) bell_sweep(Topology::Tree, &tree, n, t);
  }
  return t;
}

// ---- 5

Tally lc_invariance() {
  Tally t;
  std::mt19937_64 rng(5005);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, n, 0.15 + 0.1 * (trial % 6));
    const Partition p = canonical_foliage_partition(g);
    Graph h = g;
    for (int step = 0; step < 10; ++step) h = local_complement(h, 1 + static_cast<Vertex>(rng() % n));
    t.expect(canonical_foliage_partition(h) == p, to_string(g));
  }
  return t;
}

// ---- 6

Partition random_refinement(const Graph& g, std::mt19937_64& rng) {
  std::vector<VertexSet> blocks;
  const Partition canonical = canonical_foliage_partition(g);
  for (VertexSet b : canonical.blocks()) {
    std::vector<VertexSet> parts(1 + rng() % static_cast<std::uint64_t>(b.size()));
    for (Vertex v : b) parts[rng() % parts.size()].insert(v);
    for (VertexSet part : parts) {
      if (!part.empty()) blocks.push_back(part);
    }
  }
  return Partition(blocks);
}

Tally lifted_lc() {
  Tally t;
  std::mt19937_64 rng(6006);
  int trials = 0;
  while (trials < 500) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 6), 0.3 + 0.1 * (trials % 4));
    std::vector<Vertex> candidates;
    for (Vertex v : g.vertices()) {
      if (g.degree(v) > 1) candidates.push_back(v);
    }
    if (candidates.empty()) continue;
    const Partition w = random_refinement(g, rng);
    const Vertex a = candidates[rng() % candidates.size()];
    const Graph lhs = foliage_graph(local_complement(g, a), w).graph;
    const Graph rhs = local_complement(foliage_graph(g, w).graph, static_cast<Vertex>(w.block_of(a)) + 1);
    t.expect(is_foliage_partition(g, w) && lhs == rhs, to_string(g) + " W=" + w.to_string());
    ++trials;
  }
  return t;
}

// ---- 7

Graph random_minor(const Graph& g, std::mt19937_64& rng, int keep) {
  std::vector<Vertex> vs = g.vertices().to_vector();
  std::shuffle(vs.begin(), vs.end(), rng);
  Graph h = g;
  for (std::size_t i = static_cast<std::size_t>(keep); i < vs.size(); ++i) {
    switch (rng() % 3) {
      case 0: h = measure_z(h, vs[i]); break;
      case 1: h = measure_y(h, vs[i]); break;
      default: h = measure_x(h, vs[i]); break;
    }
  }
  for (int step = 0; step < 3; ++step) {
    const std::vector<Vertex> alive = h.vertices().to_vector();
    h = local_complement(h, alive[rng() % alive.size()]);
  }
  return h;
}

bool has_isolated(const Graph& h) {
  for (Vertex v : h.vertices()) {
    if (h.degree(v) == 0) return true;
  }
  return false;
}

Tally reduction_soundness() {
  Tally t;
  std::mt19937_64 rng(7007);
  int source_cases = 0, target_cases = 0;
  for (int trial = 0; (source_cases < 200 || target_cases < 200) && trial < 100000; ++trial) {
    const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 4), 0.35);
    const Graph h = random_minor(g, rng, 2 + static_cast<int>(rng() % 3));
    if (decide_vertex_minor(g, h).answer != Answer::Yes) {
      t.expect(false, "random minor not recognised: " + to_string(g) + " vs " + to_string(h));
      continue;
    }
    if (source_cases < 200 && !has_isolated(h)) {
      const Reduction r = source_reduce(g, h);
      t.expect(replay(g, r.ops) == r.graph && decide_vertex_minor(r.graph, h).answer == Answer::Yes,
               "source " + to_string(g) + " vs " + to_string(h));
      ++source_cases;
    }
    if (target_cases < 200) {
      // First pair foliage-equivalent in both graphs, if any.
      bool done = false;
      for (Vertex v : h.vertices()) {
        for (Vertex w : h.vertices()) {
          if (done || v == w || !foliage_equivalent(h, v, w) || !foliage_equivalent(g, v, w)) continue;
          const ReducedPair r = target_reduce(g, h, v, w);
          t.expect(decide_vertex_minor(r.source.graph, r.target.graph).answer == Answer::Yes,
                   "target " + to_string(g) + " vs " + to_string(h));
          done = true;
        }
      }
      if (done) ++target_cases;
    }
  }
  t.expect(source_cases == 200 && target_cases == 200, "too few cases");

  // Converse is not claimed: reduced pair holds, full pair does not.
  const Graph g = parse_edge_list(fixture("fig7a/source.edges"));
  const Graph h = parse_edge_list(fixture("fig7a/target.edges"));
  t.expect(decide_vertex_minor(g, h).answer == Answer::No, "fig7a full relation");
  const ReducedPair r = target_reduce(g, h, 5, 4);
  t.expect(decide_vertex_minor(r.source.graph, r.target.graph).answer == Answer::Yes, "fig7a reduced relation");
  return t;
}

// ---- 8

void quantum_checks(const Graph& g, Tally& t) {
  for (Vertex a : g.vertices()) {
    t.expect(verify_lc_unitary(g, a), "LC " + std::to_string(a) + " on " + to_string(g));
    for (Basis b : {Basis::X, Basis::Y, Basis::Z}) {
      for (int outcome : {1, -1}) {
        bool ok = false;
        try {
          ok = verify_measurement(g, a, b, outcome).passed;
        } catch (const CorrectionNotFound&) {
        }
        t.expect(ok, to_string(b) + (outcome > 0 ? "+ " : "- ") + std::to_string(a) + " on " + to_string(g));
      }
    }
  }
}

Tally quantum() {
  Tally t;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : oracle::all_connected_graphs(n)) quantum_checks(g, t);
  }
  std::mt19937_64 rng(8008);
  for (int i = 0; i < 200; ++i) quantum_checks(oracle::random_graph(rng, 6 + i % 2, 0.5), t);
  return t;
}

// ---- 9

Tally witnesses() {
  Tally t;
  for (const YesRecord& y : yes_log) {
    t.expect(replay(y.source, y.witness) == y.target, to_string(y.source) + " -> " + to_string(y.target));
  }
  return t;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Tally()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"fixtures", fixtures, 1.0},
      {"line sweep n=4..8", line_sweep, 300.0},
      {"ring sweep n=4..8", ring_sweep, 900.0},
      {"tree sweep n<=6", tree_sweep, 900.0},
      {"foliage partition under LC", lc_invariance, 0},
      {"lifted local complementation", lifted_lc, 0},
      {"reduction soundness", reduction_soundness, 0},
      {"quantum oracle", quantum, 600.0},
      {"witness validity", witnesses, 0},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    std::string error;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds > 0 && seconds > c.limit_seconds;
    const bool ok = error.empty() && t.failed == 0 && t.checked > 0 && !slow;
    if (!ok) ++failures;
    std::printf("%s %d %s: %ld/%ld checks, %.2fs", ok ? "PASS" : "FAIL", index, c.name, t.checked - t.failed,
                t.checked, seconds);
    if (!error.empty()) std::printf(" (exception: %s)", error.c_str());
    if (t.failed) std::printf(" (first failure: %s)", t.first_failure.c_str());
    if (slow) std::printf(" (over %.0fs limit)", c.limit_seconds);
    std::printf("\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
