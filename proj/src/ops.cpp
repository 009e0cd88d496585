#include "graphmin/ops.hpp"

#include <sstream>
#include <stdexcept>

namespace graphmin {

void apply(Graph& g, const Op& op) {
  switch (op.kind) {
    case OpKind::LocalComplement:
      g.complement_neighborhood(op.vertex);
      return;
    case OpKind::Delete:
    case OpKind::MeasureZ:
      g.erase_vertex(op.vertex);
      return;
    case OpKind::MeasureY:
      g.complement_neighborhood(op.vertex);
      g.erase_vertex(op.vertex);
      return;
    case OpKind::MeasureX:
      if (g.neighbors(op.vertex).empty()) {
        if (op.neighbor != 0) {
          throw std::invalid_argument("X measurement of isolated vertex " + std::to_string(op.vertex) +
                                      " names neighbor " + std::to_string(op.neighbor));
        }
        g.erase_vertex(op.vertex);
        return;
      }
      if (op.neighbor == 0) {
        throw std::invalid_argument("X measurement of vertex " + std::to_string(op.vertex) +
                                    " needs a neighbor");
      }
      g = measure_x(g, op.vertex, op.neighbor);
      return;
  }
  throw std::logic_error("unhandled op kind");
}

Graph replay(const Graph& g, const OpSequence& ops) {
  Graph out = g;
  for (const Op& op : ops) apply(out, op);
  return out;
}

std::string to_string(const Op& op) {
  switch (op.kind) {
    case OpKind::LocalComplement:
      return "LC " + std::to_string(op.vertex);
    case OpKind::Delete:
      return "DEL " + std::to_string(op.vertex);
    case OpKind::MeasureZ:
      return "Z " + std::to_string(op.vertex);
    case OpKind::MeasureY:
      return "Y " + std::to_string(op.vertex);
    case OpKind::MeasureX:
      if (op.neighbor == 0) return "X " + std::to_string(op.vertex);
      return "X " + std::to_string(op.vertex) + " " + std::to_string(op.neighbor);
  }
  return "?";
}

std::string to_string(const OpSequence& ops) {
  std::string out;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (i > 0) out += "; ";
    out += to_string(ops[i]);
  }
  return out;
}

Op parse_op(const std::string& text) {
  std::istringstream in(text);
  std::string name;
  Vertex v = 0;
  if (!(in >> name >> v)) throw std::invalid_argument("malformed op '" + text + "'");
  Op op;
  op.vertex = v;
  if (name == "LC") {
    op.kind = OpKind::LocalComplement;
  } else if (name == "DEL") {
    op.kind = OpKind::Delete;
  } else if (name == "Z") {
    op.kind = OpKind::MeasureZ;
  } else if (name == "Y") {
    op.kind = OpKind::MeasureY;
  } else if (name == "X") {
    op.kind = OpKind::MeasureX;
    Vertex b = 0;
    if (in >> b) op.neighbor = b;
  } else {
    throw std::invalid_argument("unknown op '" + name + "'");
  }
  std::string rest;
  if (in >> rest) throw std::invalid_argument("trailing input in op '" + text + "'");
  return op;
}

OpSequence relabel(const OpSequence& ops, const std::vector<Vertex>& rename) {
  auto map = [&](Vertex v) -> Vertex {
    if (v == 0) return 0;
    if (v < 0 || static_cast<std::size_t>(v) >= rename.size() || rename[v] == 0) {
      throw std::out_of_range("no relabeling for vertex " + std::to_string(v));
    }
    return rename[v];
  };
  OpSequence out;
  out.reserve(ops.size());
  for (const Op& op : ops) out.push_back({op.kind, map(op.vertex), map(op.neighbor)});
  return out;
}

}  // namespace graphmin
