#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bmsep/graph.hpp"

namespace bmsep {

/// Cut tree over a terminal vertex set X: a spanning tree on X whose edge
/// x~y induces, via the preimages of pi, a bipartition of the underlying
/// vertex set that is a minimum (x,y)-cut of weight `cut_value`.
class CutTree {
public:
  struct TreeEdge {
    VertexId x;
    VertexId y;
    ExtWeight cut_value;
  };

  /// `pi` maps every underlying vertex to a terminal and is the identity on
  /// terminals; `edges` must form a spanning tree on the terminals.
  CutTree(std::vector<VertexId> terminals,
          std::vector<std::pair<VertexId, VertexId>> pi,
          std::vector<TreeEdge> edges);

  std::span<const VertexId> terminals() const noexcept { return terminals_; }

  /// Tree edges in construction order.
  const std::vector<TreeEdge>& tree_edges() const noexcept { return edges_; }

  VertexId pi(VertexId v) const;

  /// (vertex, terminal) pairs ascending by vertex id.
  std::span<const std::pair<VertexId, VertexId>> pi_map() const noexcept { return pi_; }

  /// Preimage of the x-side terminal component after deleting the tree
  /// edge; ascending vertex ids.
  std::vector<VertexId> induced_cut(std::size_t tree_edge) const;

  /// Position of the tree edge joining x and y; throws on non-tree pairs.
  std::size_t find_tree_edge(VertexId x, VertexId y) const;

private:
  std::vector<VertexId> terminals_;
  std::vector<std::pair<VertexId, VertexId>> pi_;
  std::vector<TreeEdge> edges_;
};

/// Gomory-Hu construction generalized to a terminal set: repeatedly split
/// multi-terminal groups along a minimum cut computed with the remaining
/// groups contracted.  Makes exactly |X|-1 min_st_cut calls.
///
/// References: R. E. Gomory, T. C. Hu, "Multi-Terminal Network Flows",
/// SIAM J. Appl. Math. 9 (1961).
CutTree gomory_hu(const Graph& g, const WeightVector& c, std::span<const VertexId> terminals);

}  // namespace bmsep
