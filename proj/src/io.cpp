#include "graphmin/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace graphmin {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_int(const Token& tok, int line_no) {
  int value = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.column, "expected an integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

Vertex parse_label(const Token& tok, int line_no, int n) {
  const int v = parse_int(tok, line_no);
  if (v < 1 || v > n) {
    throw ParseError(line_no, tok.column,
                     "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
  }
  return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int line_no = 0;
  int n = -1;
  bool edges_started = false;
  Graph g;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos = end + 1;
    ++line_no;

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.starts_with('#')) {
      if (end == text.size()) break;
      continue;
    }

    if (n < 0) {
      if (tokens.size() != 1) {
        throw ParseError(line_no, tokens[1].column, "first line must hold only the vertex count");
      }
      n = parse_int(tokens[0], line_no);
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(line_no, tokens[0].column,
                         "vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
      }
      g = Graph(n);
    } else if (tokens.front().text == "labels") {
      if (edges_started) throw ParseError(line_no, tokens[0].column, "'labels' must precede all edges");
      VertexSet alive;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const Vertex v = parse_label(tokens[i], line_no, n);
        if (alive.contains(v)) {
          throw ParseError(line_no, tokens[i].column, "duplicate label " + std::to_string(v));
        }
        alive.insert(v);
      }
      g = Graph(n, alive);
    } else {
      edges_started = true;
      if (tokens.size() != 2) {
        const int column = tokens.size() > 2 ? tokens[2].column : static_cast<int>(line.size()) + 1;
        throw ParseError(line_no, column, "expected an edge 'a b'");
      }
      const Vertex a = parse_label(tokens[0], line_no, n);
      const Vertex b = parse_label(tokens[1], line_no, n);
      if (a == b) throw ParseError(line_no, tokens[1].column, "self-loop at vertex " + std::to_string(a));
      if (!g.contains(a)) throw ParseError(line_no, tokens[0].column, "vertex " + std::to_string(a) + " not in labels");
      if (!g.contains(b)) throw ParseError(line_no, tokens[1].column, "vertex " + std::to_string(b) + " not in labels");
      if (g.adjacent(a, b)) {
        throw ParseError(line_no, tokens[0].column,
                         "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
      }
      g.add_edge(a, b);
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing vertex count");
  return g;
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.capacity()) + "\n";
  if (g.vertices() != VertexSet::range(g.capacity())) {
    out += "labels";
    for (Vertex v : g.vertices()) out += " " + std::to_string(v);
    out += "\n";
  }
  for (const Edge& e : g.edges()) out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw ParseError(1, static_cast<int>(pos) + 1, "truncated graph6 data");
    const int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126) {
      throw ParseError(1, static_cast<int>(pos) + 1, "byte outside graph6 range 63..126");
    }
    ++pos;
    return c - 63;
  };
  int n = next();
  if (n == 63) {
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | next();
  }
  if (n > kMaxVertices) {
    throw ParseError(1, 1, "graph6 order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  }
  Graph g(n);
  int bits_left = 0;
  int chunk = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bits_left == 0) {
        chunk = next();
        bits_left = 6;
      }
      --bits_left;
      if ((chunk >> bits_left) & 1) g.add_edge(i + 1, j + 1);
    }
  }
  if (pos != text.size()) throw ParseError(1, static_cast<int>(pos) + 1, "trailing graph6 data");
  return g;
}

std::string write_graph6(const Graph& g) {
  if (g.vertices() != VertexSet::range(g.capacity())) {
    throw std::invalid_argument("graph6 needs labels 1..n alive");
  }
  const int n = g.capacity();
  std::string out;
  if (n < 63) {
    out += static_cast<char>(n + 63);
  } else {
    out += static_cast<char>(126);
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
  }
  int chunk = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i + 1, j + 1) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(chunk + 63);
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((chunk << (6 - filled)) + 63);
  return out;
}

std::string write_dot(const Graph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (Vertex v : g.vertices()) out += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.edges()) {
    out += "  " + std::to_string(e.first) + " -- " + std::to_string(e.second) + ";\n";
  }
  return out + "}\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace graphmin
