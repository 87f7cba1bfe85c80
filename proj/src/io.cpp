#include "bmsep/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

namespace bmsep::io {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long long parse_ll(const std::string& tok, int line, const char* what) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
}

VertexId parse_vertex(const std::string& tok, int line) {
  const long long v = parse_ll(tok, line, "vertex id");
  if (v < 0 || v > 0x7fffffff) throw ParseError(line, "vertex id out of range '" + tok + "'");
  return static_cast<VertexId>(v);
}

Rat parse_rat(const std::string& tok, int line, const char* what) {
  try {
    return Rat::parse(tok);
  } catch (const std::exception&) {
    throw ParseError(line, std::string("malformed ") + what + " '" + tok + "'");
  }
}

struct EdgeLine {
  VertexId a;
  VertexId b;
  long long u;
  int line;
};

}  // namespace

ParsedInstance read_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::string mode_name;
  MatchingMode mode = MatchingMode::capacitated;
  bool edge_caps = false, vertex_lines = true;

  std::map<VertexId, long long> b_of;
  std::vector<std::optional<EdgeLine>> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok[0] != "p") throw ParseError(line_no, "expected header 'p bmatch <n> <m> <mode>'");
      if (tok.size() != 5 || tok[1] != "bmatch")
        throw ParseError(line_no, "expected header 'p bmatch <n> <m> <mode>'");
      n = parse_ll(tok[2], line_no, "vertex count");
      m = parse_ll(tok[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      mode_name = tok[4];
      if (mode_name == "cap") {
        mode = MatchingMode::capacitated;
        edge_caps = true;
      } else if (mode_name == "perfect") {
        mode = MatchingMode::perfect;
        edge_caps = true;
      } else if (mode_name == "uncap") {
        mode = MatchingMode::uncapacitated;
      } else if (mode_name == "tsp") {
        mode = MatchingMode::capacitated;
        vertex_lines = false;
      } else {
        throw ParseError(line_no, "unknown mode '" + mode_name + "'");
      }
      edge_lines.assign(static_cast<std::size_t>(m), std::nullopt);
      have_header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (!vertex_lines) throw ParseError(line_no, "v lines are not allowed in tsp mode");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'v <id> <b>'");
      const VertexId id = parse_vertex(tok[1], line_no);
      const long long b = parse_ll(tok[2], line_no, "vertex capacity");
      if (b < 1) throw ParseError(line_no, "vertex capacity must be positive");
      if (!b_of.emplace(id, b).second)
        throw ParseError(line_no, "duplicate vertex " + tok[1]);
    } else if (tok[0] == "e") {
      const std::size_t want = edge_caps ? 5 : 4;
      if (tok.size() != want)
        throw ParseError(line_no, edge_caps ? "expected 'e <eid> <id1> <id2> <u>'"
                                            : "expected 'e <eid> <id1> <id2>'");
      const long long eid = parse_ll(tok[1], line_no, "edge id");
      if (eid < 0 || eid >= m) throw ParseError(line_no, "edge id out of range");
      if (edge_lines[static_cast<std::size_t>(eid)])
        throw ParseError(line_no, "duplicate edge " + tok[1]);
      EdgeLine e;
      e.a = parse_vertex(tok[2], line_no);
      e.b = parse_vertex(tok[3], line_no);
      if (e.a == e.b) throw ParseError(line_no, "self-loop rejected");
      e.u = edge_caps ? parse_ll(tok[4], line_no, "edge capacity") : 1;
      if (e.u < 0) throw ParseError(line_no, "edge capacity must be nonnegative");
      e.line = line_no;
      edge_lines[static_cast<std::size_t>(eid)] = e;
    } else {
      throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header");

  if (!vertex_lines) {
    for (const auto& e : edge_lines) {
      if (!e) continue;
      b_of.emplace(e->a, 2);
      b_of.emplace(e->b, 2);
    }
  }
  if (static_cast<long long>(b_of.size()) != n)
    throw ParseError(line_no + 1, vertex_lines
                                      ? "vertex line count does not match header"
                                      : "edge endpoints do not yield the declared vertex count");

  std::vector<VertexId> verts;
  std::vector<long long> b;
  for (const auto& [id, bv] : b_of) {
    verts.push_back(id);
    b.push_back(bv);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<long long> u;
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    if (!edge_lines[i]) throw ParseError(line_no + 1, "edge " + std::to_string(i) + " missing");
    const EdgeLine& e = *edge_lines[i];
    if (!b_of.count(e.a) || !b_of.count(e.b))
      throw ParseError(e.line, "edge endpoint is not a declared vertex");
    edges.emplace_back(e.a, e.b);
    if (mode != MatchingMode::uncapacitated) u.push_back(e.u);
  }
  return {Instance(Graph(std::move(verts), std::move(edges)), std::move(b), std::move(u), mode),
          mode_name};
}

FractionalPoint read_point(std::istream& in, std::size_t edge_count) {
  FractionalPoint p;
  p.x.assign(edge_count, Rat());
  std::vector<char> seen(edge_count, 0);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0] != "x") throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    if (tok.size() != 3) throw ParseError(line_no, "expected 'x <eid> <value>'");
    const long long eid = parse_ll(tok[1], line_no, "edge id");
    if (eid < 0 || static_cast<std::size_t>(eid) >= edge_count)
      throw ParseError(line_no, "edge id out of range");
    if (seen[static_cast<std::size_t>(eid)])
      throw ParseError(line_no, "duplicate x entry for edge " + tok[1]);
    Rat v = parse_rat(tok[2], line_no, "value");
    if (v.sgn() < 0) throw ParseError(line_no, "negative value");
    p.x[static_cast<std::size_t>(eid)] = std::move(v);
    seen[static_cast<std::size_t>(eid)] = 1;
  }
  return p;
}

WeightedGraph read_weighted_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<VertexId> declared;
  struct WEdge {
    VertexId a;
    VertexId b;
    ExtWeight w;
    int line;
  };
  std::vector<std::optional<WEdge>> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;
    if (!have_header) {
      if (tok.size() != 4 || tok[0] != "p" || tok[1] != "graph")
        throw ParseError(line_no, "expected header 'p graph <n> <m>'");
      n = parse_ll(tok[2], line_no, "vertex count");
      m = parse_ll(tok[3], line_no, "edge count");
      if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
      edge_lines.assign(static_cast<std::size_t>(m), std::nullopt);
      have_header = true;
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'v <id>'");
      declared.push_back(parse_vertex(tok[1], line_no));
    } else if (tok[0] == "e") {
      if (tok.size() != 5) throw ParseError(line_no, "expected 'e <eid> <id1> <id2> <w>'");
      const long long eid = parse_ll(tok[1], line_no, "edge id");
      if (eid < 0 || eid >= m) throw ParseError(line_no, "edge id out of range");
      if (edge_lines[static_cast<std::size_t>(eid)])
        throw ParseError(line_no, "duplicate edge " + tok[1]);
      WEdge e;
      e.a = parse_vertex(tok[2], line_no);
      e.b = parse_vertex(tok[3], line_no);
      if (e.a == e.b) throw ParseError(line_no, "self-loop rejected");
      Rat w = parse_rat(tok[4], line_no, "weight");
      if (w.sgn() < 0) throw ParseError(line_no, "negative weight");
      e.w = ExtWeight(std::move(w));
      e.line = line_no;
      edge_lines[static_cast<std::size_t>(eid)] = e;
    } else {
      throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    }
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header");

  std::vector<VertexId> verts;
  if (!declared.empty()) {
    verts = declared;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
      throw ParseError(line_no + 1, "duplicate vertex declaration");
  } else {
    for (const auto& e : edge_lines) {
      if (!e) continue;
      verts.push_back(e->a);
      verts.push_back(e->b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  }
  if (static_cast<long long>(verts.size()) != n)
    throw ParseError(line_no + 1, "vertex count does not match header");

  std::vector<std::pair<VertexId, VertexId>> edges;
  WeightVector weights;
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    if (!edge_lines[i]) throw ParseError(line_no + 1, "edge " + std::to_string(i) + " missing");
    const WEdge& e = *edge_lines[i];
    if (!std::binary_search(verts.begin(), verts.end(), e.a) ||
        !std::binary_search(verts.begin(), verts.end(), e.b))
      throw ParseError(e.line, "edge endpoint is not a declared vertex");
    edges.emplace_back(e.a, e.b);
    weights.push_back(e.w);
  }
  return {Graph(std::move(verts), std::move(edges)), std::move(weights)};
}

std::string mode_name(MatchingMode mode) {
  switch (mode) {
    case MatchingMode::capacitated: return "cap";
    case MatchingMode::uncapacitated: return "uncap";
    case MatchingMode::perfect: return "perfect";
  }
  return "cap";
}

std::string write_instance(const Instance& inst, const std::string& mode_name) {
  const Graph& g = inst.graph();
  std::ostringstream out;
  out << "p bmatch " << g.vertex_count() << " " << g.edge_count() << " " << mode_name << "\n";
  const bool tsp = mode_name == "tsp";
  const bool edge_caps = mode_name == "cap" || mode_name == "perfect";
  if (!tsp)
    for (VertexId v : g.vertices()) out << "v " << v << " " << inst.b(v) << "\n";
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edge(e);
    out << "e " << e << " " << a << " " << b;
    if (edge_caps) out << " " << inst.u(e);
    out << "\n";
  }
  return out.str();
}

std::string write_point(const FractionalPoint& x) {
  std::ostringstream out;
  for (std::size_t e = 0; e < x.x.size(); ++e)
    if (x.x[e].sgn() != 0) out << "x " << e << " " << x.x[e].str() << "\n";
  return out.str();
}

}  // namespace bmsep::io
