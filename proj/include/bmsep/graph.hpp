#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bmsep/rational.hpp"

namespace bmsep {

using VertexId = std::uint32_t;
using EdgeIndex = std::size_t;

/// Undirected multigraph over opaque vertex ids.  Parallel edges are kept
/// as distinct instances with dense indices 0..m-1; self-loops are rejected.
/// Immutable after construction.
class Graph {
public:
  Graph(std::vector<VertexId> vertices,
        std::vector<std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Vertex ids in ascending order.
  std::span<const VertexId> vertices() const noexcept { return vertices_; }

  const std::pair<VertexId, VertexId>& edge(EdgeIndex e) const;

  /// Indices of edges incident on v, ascending.
  std::span<const EdgeIndex> incident(VertexId v) const;

  bool has_vertex(VertexId v) const noexcept;

  /// Dense position of v within vertices(); throws on unknown ids.
  std::size_t index_of(VertexId v) const;

private:
  std::vector<VertexId> vertices_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeIndex>> incident_;
};

/// Edges with exactly one endpoint in u, ascending by index.
std::vector<EdgeIndex> delta(const Graph& g, std::span<const VertexId> u);

/// Edges with both endpoints in u, ascending by index.
std::vector<EdgeIndex> interior_edges(const Graph& g, std::span<const VertexId> u);

/// Sum of weights over delta(u); equals the weight of the complement cut.
ExtWeight cut_weight(const Graph& g, const WeightVector& w, std::span<const VertexId> u);

/// Vertices of g not contained in u, ascending.
std::vector<VertexId> complement(const Graph& g, std::span<const VertexId> u);

}  // namespace bmsep
