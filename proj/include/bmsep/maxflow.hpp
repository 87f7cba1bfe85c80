#pragma once

#include <cstdint>

#include "bmsep/graph.hpp"

namespace bmsep {

/// Minimum s-t cut together with a maximum-flow certificate.  `flow[e]` is
/// the net flow on edge e, positive in the direction of the stored endpoint
/// pair; for a finite result the flow value equals the cut weight exactly.
struct MinCutResult {
  ExtWeight value;
  std::vector<VertexId> source_side;  // ascending, contains s, not t
  std::vector<Rat> flow;              // per edge index
};

/// Highest-label push-relabel with the gap heuristic, exact arithmetic.
/// Infinite capacities are uncuttable: when every s-t cut crosses an
/// infinite edge the result value is infinity.
MinCutResult min_st_cut(const Graph& g, const WeightVector& c, VertexId s, VertexId t);

/// Process-wide invocation counter, used to verify cut-tree call counts.
std::uint64_t min_st_cut_calls() noexcept;
void reset_min_st_cut_calls() noexcept;

}  // namespace bmsep
