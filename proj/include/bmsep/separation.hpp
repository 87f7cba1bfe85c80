#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmsep/graph.hpp"
#include "bmsep/odd_cut.hpp"

namespace bmsep {

enum class MatchingMode { capacitated, uncapacitated, perfect };

/// A b-matching instance: graph, positive vertex capacities b and, in
/// capacitated/perfect modes, nonnegative integer edge capacities u.
class Instance {
public:
  Instance(Graph graph, std::vector<long long> b, std::vector<long long> u, MatchingMode mode);

  const Graph& graph() const noexcept { return graph_; }
  MatchingMode mode() const noexcept { return mode_; }

  long long b(VertexId v) const { return b_[graph_.index_of(v)]; }
  long long u(EdgeIndex e) const;

  /// b in graph().vertices() order.
  const std::vector<long long>& b_by_position() const noexcept { return b_; }
  /// u by edge index; empty in uncapacitated mode.
  const std::vector<long long>& u_by_edge() const noexcept { return u_; }

private:
  Graph graph_;
  std::vector<long long> b_;
  std::vector<long long> u_;
  MatchingMode mode_;
};

/// Fractional point, dense by edge index.
struct FractionalPoint {
  std::vector<Rat> x;
};

struct ConstraintViolation {
  enum class Kind { degree, lower_bound, upper_bound };
  Kind kind;
  VertexId vertex = 0;  // degree violations
  EdgeIndex edge = 0;   // bound violations
  Rat amount;           // > 0
};

/// Auxiliary graph for capacitated separation: the instance graph plus an
/// apex vertex joined to every original vertex.  Original edges keep their
/// indices; apex edges follow, one per original vertex in ascending order.
struct StarGraph {
  Graph graph;
  WeightVector c;
  WeightVector c_prime;
  std::vector<VertexId> t_set;
  VertexId apex;
};

/// A violated blossom inequality
///   sum_{e in E(W)} x_e + sum_{f in F} x_f <= rhs,
/// with rhs = floor((b(W) + sum_{f in F} u_f) / 2).
struct ViolatedBlossom {
  std::vector<VertexId> w;
  std::vector<EdgeIndex> f;
  long long rhs = 0;
  Rat lhs;
  Rat violation;  // lhs - rhs > 0
  Rat beta;       // violation == (1 - beta) / 2
};

struct SeparationResult {
  std::optional<ViolatedBlossom> violated;
  /// Minimum blossom value (capacitated/perfect) or minimum T-cut value
  /// (uncapacitated); infinity when the inequality family is empty.
  ExtWeight min_beta;
};

struct BlossomSides {
  Rat lhs;
  long long rhs = 0;
  Rat oddcut_lhs;
};

/// Slack of the degree inequality at i: b_i minus the fractional degree.
Rat slack(const Instance& inst, const FractionalPoint& x, VertexId i);

/// All violated degree and bound constraints, vertices first then edges,
/// each ascending.  In perfect mode any nonzero slack is a violation.
std::vector<ConstraintViolation> check_degree_and_bounds(const Instance& inst,
                                                         const FractionalPoint& x);

/// Star-graph construction for capacitated/perfect instances: original edge
/// e carries (x_e, u_e - x_e) when u_e is odd and (min(x_e, u_e - x_e),
/// infinity) when u_e is even; the apex edge at i carries (slack_i,
/// infinity).  T holds the odd-b vertices, plus the apex when sum(b) is
/// odd, so |T| is always even.  Requires a degree/bound feasible point.
StarGraph build_star_graph(const Instance& inst, const FractionalPoint& x);

/// Left side, right side and rewritten cut form of the blossom inequality
/// for (W, F).  The exact identity oddcut_lhs == 1 + 2*(rhs - lhs) is
/// checked on every call.
BlossomSides blossom_lhs_rhs(const Instance& inst, const FractionalPoint& x,
                             std::span<const VertexId> w, std::span<const EdgeIndex> f);

/// Most violated blossom inequality, if any, via blossom minimization on
/// the star graph.  A minimum value below one maps back to an inequality on
/// the original graph violated by exactly (1 - beta)/2.
SeparationResult separate_capacitated(const Instance& inst, const FractionalPoint& x);

/// Most violated simplified blossom inequality (F empty, b(W) odd), via a
/// minimum T-cut on the slack-weighted star graph.
SeparationResult separate_uncapacitated(const Instance& inst, const FractionalPoint& x);

/// 2-matching blossoms for the TSP: b = 2, u = 1 on the given graph.
SeparationResult separate_tsp(const Graph& g, const FractionalPoint& x);

}  // namespace bmsep
