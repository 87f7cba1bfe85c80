#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmsep/cut_tree.hpp"
#include "bmsep/graph.hpp"

namespace bmsep {

struct TCut {
  std::vector<VertexId> u;  // T-odd side, ascending
  ExtWeight value;
};

/// A blossom (U, F): F is a subset of delta(U) with |T∩U| + |F| odd, and
/// beta is the sum of c over delta(U)\F plus the sum of c' over F.
struct Blossom {
  std::vector<VertexId> u;
  std::vector<EdgeIndex> f;
  ExtWeight beta;
};

struct MinBetaF {
  std::vector<EdgeIndex> f;
  ExtWeight beta;
  bool has_blossom;  // false iff delta(U) is empty while |T∩U| is even
};

/// Minimum T-cut via a cut tree on terminal set T: every T-odd tree edge is
/// a candidate and the best one is returned.
///
/// References: M. W. Padberg, M. R. Rao, "Odd Minimum Cut-Sets and
/// b-Matchings", Math. Oper. Res. 7 (1982).
TCut minimum_t_cut(const Graph& g, const WeightVector& c, std::span<const VertexId> t_set);

/// Indices of tree edges whose induced bipartition meets t_set oddly on
/// both sides, ascending (= construction order).
std::vector<std::size_t> t_odd_tree_edges(std::span<const VertexId> t_set, const CutTree& tree);

/// Minimum of beta(U, .) over parity-feasible F: tentatively take the edges
/// with c' < c, then, if the parity is wrong, flip the edge minimizing
/// |c - c'| (lowest index on ties).  Runs in O(|delta(U)|) after the cut
/// computation.
///
/// References: M. Padberg, G. Rinaldi, "Facet Identification for the
/// Symmetric Traveling Salesman Polytope", Math. Prog. 47 (1990).
MinBetaF beta_min_f(const Graph& g, const WeightVector& c, const WeightVector& c_prime,
                    std::span<const VertexId> t_set, std::span<const VertexId> u);

/// Global blossom minimization: build one cut tree with weights
/// min(c, c') and terminal set V, evaluate beta_min_f on each induced cut,
/// and return the best blossom (first tree edge wins ties).  Requires |T|
/// even; returns nothing when no parity-feasible pair exists at all.
std::optional<Blossom> minimize_blossom(const Graph& g, const WeightVector& c,
                                        const WeightVector& c_prime,
                                        std::span<const VertexId> t_set);

/// Symmetric difference of t_set with the endpoint pairs of every edge
/// where c' < c.  Test-suite helper for the correctness argument of
/// minimize_blossom.
std::vector<VertexId> t_prime(const Graph& g, const WeightVector& c,
                              const WeightVector& c_prime, std::span<const VertexId> t_set);

}  // namespace bmsep
