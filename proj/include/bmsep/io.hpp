#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "bmsep/separation.hpp"

namespace bmsep::io {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& message)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no) {}
};

/// Instance file:
///   p bmatch <n> <m> <mode>          mode in {cap, uncap, perfect, tsp}
///   v <id> <b>                       n lines; omitted in tsp mode (b = 2)
///   e <eid> <id1> <id2> [<u>]        m lines; <u> only in cap/perfect
/// Edge ids must be exactly 0..m-1.
struct ParsedInstance {
  Instance instance;
  std::string mode_name;  // as written in the header
};

ParsedInstance read_instance(std::istream& in);

/// Point file: `x <eid> <value>` lines, value a nonnegative rational
/// ("p/q", integer, or exact decimal); absent edges default to 0.
FractionalPoint read_point(std::istream& in, std::size_t edge_count);

/// Weighted graph file:
///   p graph <n> <m>
///   v <id>                           optional; inferred from edges if absent
///   e <eid> <id1> <id2> <w>          w a nonnegative rational
struct WeightedGraph {
  Graph graph;
  WeightVector weights;
};

WeightedGraph read_weighted_graph(std::istream& in);

std::string mode_name(MatchingMode mode);

/// Canonical text form; read_instance(write_instance(i)) reproduces i.
std::string write_instance(const Instance& inst, const std::string& mode_name);

/// Canonical text form: one x line per nonzero entry, ascending.
std::string write_point(const FractionalPoint& x);

}  // namespace bmsep::io
