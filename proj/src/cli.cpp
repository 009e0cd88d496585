#include "graphmin/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "graphmin/bell.hpp"
#include "graphmin/foliage.hpp"
#include "graphmin/io.hpp"
#include "graphmin/ops.hpp"
#include "graphmin/orbit.hpp"
#include "graphmin/quantum.hpp"
#include "graphmin/vminor.hpp"

namespace graphmin::cli {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

struct Common {
  bool json = false;
  std::string format = "edges";
  std::size_t budget = kDefaultNodeBudget;
};

class Digest {
 public:
  void add(std::string_view bytes) {
    h_ = fnv1a64(bytes, h_);
    h_ = fnv1a64(std::string_view("\0", 1), h_);
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

Graph load_graph(const std::string& path, const std::string& format, Digest& digest) {
  const std::string text = read_file(path);
  digest.add(text);
  try {
    if (format == "g6") return parse_graph6(text);
    return parse_edge_list(text);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Json witness_json(const OpSequence& ops) {
  Json arr = Json::array();
  for (const Op& op : ops) arr.push_back(to_string(op));
  return arr;
}

Json envelope(const std::string& command, const Digest& digest) {
  return Json{{"schema", 1}, {"command", command}, {"input_digest", digest.hex()}};
}

std::string blocks_text(const Partition& p) {
  std::string out;
  for (VertexSet b : p.blocks()) out += (out.empty() ? "" : " ") + b.to_string();
  return out;
}

std::string reps_text(const std::vector<Vertex>& reps) {
  std::string out;
  for (Vertex v : reps) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

// ---- foliage ---------------------------------------------------------

struct FoliageArgs {
  std::string file;
  int nth = 1;
  bool dot = false;
};

int cmd_foliage(const FoliageArgs& a, const Common& c, std::ostream& out) {
  Digest digest;
  const Graph g = load_graph(a.file, c.format, digest);
  const FoliageGraph f = a.nth == 1 ? foliage_graph(g, canonical_foliage_partition(g)) : nth_foliage_graph(g, a.nth);
  const Graph labeled = f.labeled();

  Json shapes = Json::array();
  std::ostringstream text;
  text << "blocks: " << blocks_text(f.blocks) << "\n";
  if (a.nth == 1) {
    for (VertexSet b : f.blocks.blocks()) {
      const BlockShape s = classify_block(g, b);
      Json entry{{"block", b.to_vector()}, {"shape", to_string(s.kind)}};
      text << b.to_string() << " " << to_string(s.kind);
      if (s.kind == BlockKind::Star) {
        entry["axil"] = s.axil;
        text << " axil=" << s.axil;
      }
      text << "\n";
      shapes.push_back(entry);
    }
  }
  text << "foliage graph on representatives " << reps_text(f.representatives) << ":\n";
  text << (a.dot ? write_dot(labeled, "F") : write_edge_list(labeled));

  if (c.json) {
    Json j = envelope("foliage", digest);
    Json blocks = Json::array();
    for (VertexSet b : f.blocks.blocks()) blocks.push_back(b.to_vector());
    j["result"] = {{"nth", a.nth},
                   {"blocks", blocks},
                   {"representatives", f.representatives},
                   {"foliage_graph", write_edge_list(labeled)}};
    if (a.nth == 1) j["result"]["shapes"] = shapes;
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return kExitDecided;
}

// ---- orbit -----------------------------------------------------------

int cmd_orbit(const std::string& file, const Common& c, std::ostream& out) {
  Digest digest;
  const Graph g = load_graph(file, c.format, digest);
  LcOrbit orbit;
  try {
    orbit = LcOrbit::explore(g, c.budget);
  } catch (const BudgetExhausted& e) {
    if (c.json) {
      Json j = envelope("orbit", digest);
      j["result"] = {{"answer", "unknown"}};
      j["rule"] = rules::kBudgetExhausted;
      out << j.dump(2) << "\n";
    } else {
      out << "orbit size: unknown (" << e.what() << ")\n";
    }
    return kExitUnknown;
  }
  if (c.json) {
    Json members = Json::array();
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      members.push_back({{"graph", orbit_key(orbit.members()[i]).text}, {"path", orbit.path_from_root(i)}});
    }
    Json j = envelope("orbit", digest);
    j["result"] = {{"size", orbit.size()}, {"members", members}};
    out << j.dump(2) << "\n";
    return kExitDecided;
  }
  out << "orbit size: " << orbit.size() << "\n";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    out << orbit_key(orbit.members()[i]).text;
    const std::vector<Vertex> path = orbit.path_from_root(i);
    if (!path.empty()) out << "  via " << reps_text(path);
    out << "\n";
  }
  return kExitDecided;
}

// ---- decide ----------------------------------------------------------

void print_decision(const std::string& command, const Decision& d, const std::optional<Graph>& result_graph,
                    bool show_witness, Json result, const Digest& digest, const Common& c, std::ostream& out) {
  if (c.json) {
    Json j = envelope(command, digest);
    result["answer"] = to_string(d.answer);
    if (result_graph) result["result_graph"] = write_edge_list(*result_graph);
    j["result"] = result;
    if (d.answer == Answer::Yes && show_witness) j["witness"] = witness_json(d.witness);
    j["rule"] = d.rule;
    out << j.dump(2) << "\n";
    return;
  }
  out << "answer: " << to_string(d.answer) << "\n";
  out << "rule: " << d.rule << "\n";
  if (d.answer == Answer::Yes && show_witness) {
    out << "witness: " << to_string(d.witness) << "\n";
    if (result_graph) out << "result:\n" << write_edge_list(*result_graph);
  }
}

int exit_for(const Decision& d) { return d.answer == Answer::Unknown ? kExitUnknown : kExitDecided; }

int cmd_decide(const std::string& source, const std::string& target, const Common& c, std::ostream& out) {
  Digest digest;
  const Graph g = load_graph(source, c.format, digest);
  const Graph h = load_graph(target, c.format, digest);
  const Decision d = decide_vertex_minor(g, h, c.budget);
  std::optional<Graph> result;
  if (d.answer == Answer::Yes) result = replay(g, d.witness);
  print_decision("decide", d, result, true, Json::object(), digest, c, out);
  return exit_for(d);
}

// ---- bell ------------------------------------------------------------

struct BellArgs {
  std::string topology;
  int n = 0;
  std::string tree_file;
  std::vector<int> pair_a;
  std::vector<int> pair_b;
  bool witness = false;
};

int cmd_bell(const BellArgs& a, const Common& c, std::ostream& out) {
  Digest digest;
  BellQuery q;
  q.topology = parse_topology(a.topology);
  q.pair_a = {a.pair_a.at(0), a.pair_a.at(1)};
  q.pair_b = {a.pair_b.at(0), a.pair_b.at(1)};
  if (q.topology == Topology::Tree) {
    if (a.tree_file.empty()) throw std::invalid_argument("--graph is required for --topology tree");
    q.tree = load_graph(a.tree_file, c.format, digest);
    q.n = q.tree.capacity();
  } else {
    if (a.n == 0) throw std::invalid_argument("--n is required for --topology " + a.topology);
    q.n = a.n;
  }
  digest.add("topology=" + a.topology + " n=" + std::to_string(q.n) + " pairA=" + std::to_string(q.pair_a.first) +
             "," + std::to_string(q.pair_a.second) + " pairB=" + std::to_string(q.pair_b.first) + "," +
             std::to_string(q.pair_b.second));
  const Decision d = decide_bell(q);
  std::optional<Graph> result;
  if (d.answer == Answer::Yes && a.witness) result = replay(q.graph(), d.witness);
  Json info{{"topology", a.topology}, {"n", q.n}, {"pairA", a.pair_a}, {"pairB", a.pair_b}};
  print_decision("bell", d, result, a.witness, info, digest, c, out);
  return exit_for(d);
}

// ---- reduce ----------------------------------------------------------

struct ReduceArgs {
  std::string file;
  std::vector<int> protect;
  std::string target_file;
  bool foliage = false;
  std::vector<int> reps;
  std::string replay_file;
};

OpSequence read_witness(const std::string& path, Digest& digest) {
  const std::string text = read_file(path);
  digest.add(text);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  const Json& list = j.is_array() ? j : j.at("witness");
  OpSequence ops;
  for (const Json& op : list) ops.push_back(parse_op(op.get<std::string>()));
  return ops;
}

int cmd_reduce(const ReduceArgs& a, const Common& c, std::ostream& out) {
  Digest digest;
  const Graph g = load_graph(a.file, c.format, digest);
  const int modes = (!a.protect.empty()) + (!a.target_file.empty()) + a.foliage + (!a.replay_file.empty());
  if (modes != 1) throw std::invalid_argument("choose exactly one of --protect, --target, --foliage, --replay");

  Reduction r;
  if (!a.replay_file.empty()) {
    r.ops = read_witness(a.replay_file, digest);
    r.graph = replay(g, r.ops);
    if (!c.json) {
      out << write_edge_list(r.graph);
      return kExitDecided;
    }
  } else if (!a.protect.empty()) {
    for (int v : a.protect) g.require(v);
    r = source_reduce(g, VertexSet(std::span<const Vertex>(a.protect)));
  } else if (!a.target_file.empty()) {
    r = source_reduce(g, load_graph(a.target_file, c.format, digest));
  } else {
    const Partition w = canonical_foliage_partition(g);
    const std::vector<Vertex> reps = a.reps.empty() ? min_representatives(w) : a.reps;
    r = extract_foliage_graph(g, w, reps);
  }

  if (c.json) {
    Json j = envelope("reduce", digest);
    j["result"] = {{"result_graph", write_edge_list(r.graph)}};
    j["witness"] = witness_json(r.ops);
    out << j.dump(2) << "\n";
  } else {
    out << "ops: " << (r.ops.empty() ? "(none)" : to_string(r.ops)) << "\n";
    out << "result:\n" << write_edge_list(r.graph);
  }
  return kExitDecided;
}

// ---- verify-quantum --------------------------------------------------

struct QuantumArgs {
  std::string file;
  std::string op = "all";
  int vertex = 0;
  int neighbor = 0;
  double tolerance = kDefaultTolerance;
};

int cmd_verify_quantum(const QuantumArgs& a, const Common& c, std::ostream& out) {
  Digest digest;
  const Graph g = load_graph(a.file, c.format, digest);
  if (a.vertex != 0) g.require(a.vertex);
  const VertexSet targets = a.vertex != 0 ? VertexSet{a.vertex} : g.vertices();
  const bool all = a.op == "all";
  const bool do_lc = all || a.op == "lc";
  std::vector<Basis> bases;
  if (all) {
    bases = {Basis::X, Basis::Y, Basis::Z};
  } else if (a.op != "lc") {
    bases = {parse_basis(a.op)};
  }

  int failed = 0;
  Json checks = Json::array();
  std::ostringstream text;
  for (Vertex v : targets) {
    if (do_lc) {
      const bool ok = verify_lc_unitary(g, v, a.tolerance);
      failed += !ok;
      text << "LC " << v << ": " << (ok ? "pass" : "FAIL") << "\n";
      checks.push_back({{"op", "LC"}, {"vertex", v}, {"passed", ok}});
    }
    for (Basis b : bases) {
      const Vertex nb = (b == Basis::X && a.neighbor != 0 && a.vertex != 0) ? a.neighbor : 0;
      for (int outcome : {1, -1}) {
        const std::string label = to_string(b) + (outcome > 0 ? "+" : "-");
        Json entry{{"op", label}, {"vertex", v}};
        try {
          const MeasurementReport r = verify_measurement(g, v, b, outcome, nb, a.tolerance);
          failed += !r.passed;
          text << label << " " << v << ": " << (r.passed ? "pass" : "FAIL");
          if (r.vacuous) text << " (zero probability)";
          Json corr = Json::object();
          for (const auto& [q, name] : r.correction) {
            text << (q == r.correction.front().first ? " correction " : " ") << q << ":" << name;
            corr[std::to_string(q)] = name;
          }
          text << "\n";
          entry["passed"] = r.passed;
          entry["probability"] = r.probability;
          entry["correction"] = corr;
        } catch (const CorrectionNotFound& e) {
          ++failed;
          text << label << " " << v << ": FAIL (" << e.what() << ")\n";
          entry["passed"] = false;
        }
        checks.push_back(entry);
      }
    }
  }
  if (failed == 0) {
    text << "all " << checks.size() << " checks passed\n";
  } else {
    text << failed << " of " << checks.size() << " checks failed\n";
  }
  if (c.json) {
    Json j = envelope("verify-quantum", digest);
    j["result"] = {{"passed", failed == 0}, {"tolerance", a.tolerance}, {"checks", checks}};
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return failed == 0 ? kExitDecided : kExitCheckFailed;
}

std::size_t default_budget() {
  if (const char* env = std::getenv("GRAPHMIN_BUDGET")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("GRAPHMIN_BUDGET is not a number: ") + env);
    }
  }
  return kDefaultNodeBudget;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::ostringstream buffered;
  Common common;
  try {
    common.budget = default_budget();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  CLI::App app{"Graph-state rewriting and vertex-minor tools", "graphmin"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub, bool with_budget) {
    sub->add_flag("--json", common.json, "Emit JSON");
    sub->add_option("--format", common.format, "Graph file format")->check(CLI::IsMember({"edges", "g6"}));
    if (with_budget) sub->add_option("--budget", common.budget, "LC orbit node budget")->check(CLI::PositiveNumber);
  };

  FoliageArgs foliage_args;
  auto* foliage = app.add_subcommand("foliage", "Foliage partition, block shapes and foliage graph");
  foliage->add_option("graph", foliage_args.file, "Graph file")->required();
  foliage->add_option("--nth", foliage_args.nth, "Iterate the canonical quotient k times")->check(CLI::PositiveNumber);
  foliage->add_flag("--dot", foliage_args.dot, "Print the foliage graph as DOT");
  add_common(foliage, false);

  std::string orbit_file;
  auto* orbit = app.add_subcommand("orbit", "Enumerate the LC orbit of a graph");
  orbit->add_option("graph", orbit_file, "Graph file")->required();
  add_common(orbit, true);

  std::string source_file;
  std::string target_file;
  auto* decide = app.add_subcommand("decide", "Decide whether TARGET is a vertex-minor of SOURCE");
  decide->add_option("source", source_file, "Source graph file")->required();
  decide->add_option("target", target_file, "Target graph file")->required();
  add_common(decide, true);

  BellArgs bell_args;
  auto* bell = app.add_subcommand("bell", "Decide two-Bell-pair extraction on a line, ring or tree");
  bell->add_option("--topology", bell_args.topology, "line, ring or tree")->required();
  bell->add_option("--n", bell_args.n, "Number of vertices (line, ring)");
  bell->add_option("--graph", bell_args.tree_file, "Tree graph file (tree)");
  bell->add_option("--pairA", bell_args.pair_a, "First pair")->expected(2)->required();
  bell->add_option("--pairB", bell_args.pair_b, "Second pair")->expected(2)->required();
  bell->add_flag("--witness", bell_args.witness, "Print the extraction schedule");
  add_common(bell, false);

  ReduceArgs reduce_args;
  auto* reduce = app.add_subcommand("reduce", "Source reduction, foliage extraction or witness replay");
  reduce->add_option("graph", reduce_args.file, "Source graph file")->required();
  reduce->add_option("--protect", reduce_args.protect, "Vertices kept by source reduction");
  reduce->add_option("--target", reduce_args.target_file, "Protect the vertices of this target graph");
  reduce->add_flag("--foliage", reduce_args.foliage, "Extract the canonical foliage graph");
  reduce->add_option("--reps", reduce_args.reps, "Representatives for --foliage, one per block");
  reduce->add_option("--replay", reduce_args.replay_file, "JSON witness to replay");
  add_common(reduce, false);

  QuantumArgs quantum_args;
  auto* quantum = app.add_subcommand("verify-quantum", "Check rewrites against dense state vectors");
  quantum->add_option("graph", quantum_args.file, "Graph file")->required();
  quantum->add_option("--op", quantum_args.op, "lc, x, y, z or all")
      ->check(CLI::IsMember({"lc", "x", "y", "z", "X", "Y", "Z", "all"}));
  quantum->add_option("--vertex", quantum_args.vertex, "Vertex to act on (default: every vertex)");
  quantum->add_option("--neighbor", quantum_args.neighbor, "X-measurement neighbor (with --vertex)");
  quantum->add_option("--tolerance", quantum_args.tolerance, "Per-amplitude tolerance")->check(CLI::PositiveNumber);
  add_common(quantum, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDecided : kExitInputError;
  }

  int code = kExitInputError;
  try {
    if (*foliage) code = cmd_foliage(foliage_args, common, buffered);
    if (*orbit) code = cmd_orbit(orbit_file, common, buffered);
    if (*decide) code = cmd_decide(source_file, target_file, common, buffered);
    if (*bell) code = cmd_bell(bell_args, common, buffered);
    if (*reduce) code = cmd_reduce(reduce_args, common, buffered);
    if (*quantum) code = cmd_verify_quantum(quantum_args, common, buffered);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  out << buffered.str();
  return code;
}

}  // namespace graphmin::cli
