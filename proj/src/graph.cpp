#include "bmsep/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmsep {

Graph::Graph(std::vector<VertexId> vertices,
             std::vector<std::pair<VertexId, VertexId>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("Graph: duplicate vertex id");
  incident_.resize(vertices_.size());
  for (EdgeIndex e = 0; e < edges_.size(); ++e) {
    const auto& [u, v] = edges_[e];
    if (u == v) throw std::invalid_argument("Graph: self-loop rejected");
    incident_[index_of(u)].push_back(e);
    incident_[index_of(v)].push_back(e);
  }
}

const std::pair<VertexId, VertexId>& Graph::edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw std::invalid_argument("Graph: edge index out of range");
  return edges_[e];
}

std::span<const EdgeIndex> Graph::incident(VertexId v) const {
  return incident_[index_of(v)];
}

bool Graph::has_vertex(VertexId v) const noexcept {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t Graph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v)
    throw std::invalid_argument("Graph: unknown vertex id");
  return static_cast<std::size_t>(it - vertices_.begin());
}

namespace {

std::vector<char> member_mask(const Graph& g, std::span<const VertexId> u) {
  std::vector<char> mask(g.vertex_count(), 0);
  for (VertexId v : u) mask[g.index_of(v)] = 1;
  return mask;
}

}  // namespace

std::vector<EdgeIndex> delta(const Graph& g, std::span<const VertexId> u) {
  const auto mask = member_mask(g, u);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edge(e);
    if (mask[g.index_of(a)] != mask[g.index_of(b)]) out.push_back(e);
  }
  return out;
}

std::vector<EdgeIndex> interior_edges(const Graph& g, std::span<const VertexId> u) {
  const auto mask = member_mask(g, u);
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edge(e);
    if (mask[g.index_of(a)] && mask[g.index_of(b)]) out.push_back(e);
  }
  return out;
}

ExtWeight cut_weight(const Graph& g, const WeightVector& w, std::span<const VertexId> u) {
  if (w.size() != g.edge_count())
    throw std::invalid_argument("cut_weight: weight vector size mismatch");
  ExtWeight total;
  for (EdgeIndex e : delta(g, u)) total += w[e];
  return total;
}

std::vector<VertexId> complement(const Graph& g, std::span<const VertexId> u) {
  const auto mask = member_mask(g, u);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (!mask[i]) out.push_back(g.vertices()[i]);
  return out;
}

}  // namespace bmsep
