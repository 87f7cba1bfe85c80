#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bmsep/graph.hpp"
#include "bmsep/separation.hpp"

namespace bmsep::oracle {

// Brute-force reference implementations for small instances.  These share
// no code with the flow, cut-tree or separation algorithms they validate;
// enumeration guards are hard errors, never silent truncation.  Ties are
// broken toward the lexicographically smallest (U, F).

struct CutResult {
  ExtWeight value;
  std::vector<VertexId> u;
};

struct BlossomResult {
  ExtWeight beta;
  std::vector<VertexId> u;
  std::vector<EdgeIndex> f;
};

struct ViolationResult {
  Rat violation;
  std::vector<VertexId> w;
  std::vector<EdgeIndex> f;
};

/// Minimum over all U with s in U, t not in U.  Guard: |V| <= 20.
CutResult bf_min_st_cut(const Graph& g, const WeightVector& c, VertexId s, VertexId t);

/// Minimum over all T-odd U.  Guard: |V| <= 16; |T| even and nonempty.
CutResult bf_min_t_cut(const Graph& g, const WeightVector& c, std::span<const VertexId> t_set);

/// Minimum of beta(U, F) over proper nonempty U and F within delta(U) with
/// |T∩U| + |F| odd; empty when no such pair exists.  Guards: |V| <= 8 and
/// every |delta(U)| <= 14.
std::optional<BlossomResult> bf_min_blossom(const Graph& g, const WeightVector& c,
                                            const WeightVector& c_prime,
                                            std::span<const VertexId> t_set);

/// Maximizes lhs - rhs of the blossom inequality over all parity-valid
/// (W, F); empty when the maximum is not positive.  In uncapacitated mode
/// only F = {} with b(W) odd is enumerated.  Guards: |V| <= 6, |E| <= 10.
std::optional<ViolationResult> bf_most_violated_blossom(const Instance& inst,
                                                        const FractionalPoint& x);

}  // namespace bmsep::oracle
