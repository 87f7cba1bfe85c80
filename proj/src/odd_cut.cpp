#include "bmsep/odd_cut.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace bmsep {

namespace {

std::vector<VertexId> sorted_unique(std::span<const VertexId> v) {
  std::vector<VertexId> out(v.begin(), v.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t count_in(std::span<const VertexId> sorted_set, std::span<const VertexId> sorted_sub) {
  std::size_t n = 0;
  for (VertexId v : sorted_sub)
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), v)) ++n;
  return n;
}

// |c - c'| as a flip cost; infinity when either side is infinite.
ExtWeight flip_cost(const ExtWeight& a, const ExtWeight& b) {
  if (!a.finite() || !b.finite()) return ExtWeight::infinity();
  return ExtWeight((a.value() - b.value()).abs());
}

}  // namespace

std::vector<std::size_t> t_odd_tree_edges(std::span<const VertexId> t_set, const CutTree& tree) {
  const std::vector<VertexId> t = sorted_unique(t_set);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < tree.tree_edges().size(); ++k) {
    const std::vector<VertexId> side = tree.induced_cut(k);
    std::size_t in_side = count_in(side, t);
    std::size_t in_other = 0;
    for (const auto& [v, x] : tree.pi_map())
      if (std::binary_search(t.begin(), t.end(), v) &&
          !std::binary_search(side.begin(), side.end(), v))
        ++in_other;
    if (in_side % 2 == 1 && in_other % 2 == 1) out.push_back(k);
  }
  return out;
}

TCut minimum_t_cut(const Graph& g, const WeightVector& c, std::span<const VertexId> t_set) {
  const std::vector<VertexId> t = sorted_unique(t_set);
  if (t.empty() || t.size() % 2 != 0)
    throw std::invalid_argument("minimum_t_cut: |T| must be even and nonzero");
  const CutTree tree = gomory_hu(g, c, t);
  const std::vector<std::size_t> candidates = t_odd_tree_edges(t, tree);
  assert(!candidates.empty());
  std::size_t best = candidates.front();
  for (std::size_t k : candidates)
    if (tree.tree_edges()[k].cut_value < tree.tree_edges()[best].cut_value) best = k;
  return {tree.induced_cut(best), tree.tree_edges()[best].cut_value};
}

MinBetaF beta_min_f(const Graph& g, const WeightVector& c, const WeightVector& c_prime,
                    std::span<const VertexId> t_set, std::span<const VertexId> u) {
  if (c.size() != g.edge_count() || c_prime.size() != g.edge_count())
    throw std::invalid_argument("beta_min_f: weight vector size mismatch");
  const std::vector<VertexId> t = sorted_unique(t_set);
  const std::vector<VertexId> uset = sorted_unique(u);
  const std::vector<EdgeIndex> cut = delta(g, uset);

  std::size_t parity = count_in(uset, t) % 2;
  std::vector<EdgeIndex> f;
  ExtWeight beta;
  for (EdgeIndex e : cut) {
    if (c_prime[e] < c[e]) {
      f.push_back(e);
      beta += c_prime[e];
    } else {
      beta += c[e];
    }
  }
  if ((parity + f.size()) % 2 == 1) return {std::move(f), std::move(beta), true};
  if (cut.empty()) return {{}, ExtWeight::infinity(), false};

  EdgeIndex flip = cut.front();
  ExtWeight cost = flip_cost(c[flip], c_prime[flip]);
  for (std::size_t i = 1; i < cut.size(); ++i) {
    ExtWeight cand = flip_cost(c[cut[i]], c_prime[cut[i]]);
    if (cand < cost) {
      cost = std::move(cand);
      flip = cut[i];
    }
  }
  auto it = std::lower_bound(f.begin(), f.end(), flip);
  if (it != f.end() && *it == flip)
    f.erase(it);
  else
    f.insert(it, flip);
  beta += cost;
  return {std::move(f), std::move(beta), true};
}

std::optional<Blossom> minimize_blossom(const Graph& g, const WeightVector& c,
                                        const WeightVector& c_prime,
                                        std::span<const VertexId> t_set) {
  if (g.vertex_count() == 0) throw std::invalid_argument("minimize_blossom: empty graph");
  if (c.size() != g.edge_count() || c_prime.size() != g.edge_count())
    throw std::invalid_argument("minimize_blossom: weight vector size mismatch");
  const std::vector<VertexId> t = sorted_unique(t_set);
  if (t.size() % 2 != 0)
    throw std::invalid_argument("minimize_blossom: |T| must be even");
  for (VertexId v : t)
    if (!g.has_vertex(v)) throw std::invalid_argument("minimize_blossom: unknown vertex in T");

  WeightVector w;
  w.reserve(g.edge_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) w.push_back(min_weight(c[e], c_prime[e]));

  const CutTree tree = gomory_hu(g, w, g.vertices());
  std::optional<Blossom> best;
  for (std::size_t k = 0; k < tree.tree_edges().size(); ++k) {
    std::vector<VertexId> side = tree.induced_cut(k);
    MinBetaF r = beta_min_f(g, c, c_prime, t, side);
    if (!r.has_blossom) continue;
    if (!best || r.beta < best->beta)
      best = Blossom{std::move(side), std::move(r.f), std::move(r.beta)};
  }
  return best;
}

std::vector<VertexId> t_prime(const Graph& g, const WeightVector& c,
                              const WeightVector& c_prime, std::span<const VertexId> t_set) {
  if (c.size() != g.edge_count() || c_prime.size() != g.edge_count())
    throw std::invalid_argument("t_prime: weight vector size mismatch");
  std::set<VertexId> acc(t_set.begin(), t_set.end());
  auto toggle = [&](VertexId v) {
    auto [it, inserted] = acc.insert(v);
    if (!inserted) acc.erase(it);
  };
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    if (c_prime[e] < c[e]) {
      toggle(g.edge(e).first);
      toggle(g.edge(e).second);
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace bmsep
