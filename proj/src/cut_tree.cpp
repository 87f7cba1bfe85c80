#include "bmsep/cut_tree.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "bmsep/maxflow.hpp"

namespace bmsep {

CutTree::CutTree(std::vector<VertexId> terminals,
                 std::vector<std::pair<VertexId, VertexId>> pi,
                 std::vector<TreeEdge> edges)
    : terminals_(std::move(terminals)), pi_(std::move(pi)), edges_(std::move(edges)) {
  std::sort(terminals_.begin(), terminals_.end());
  if (terminals_.empty()) throw std::invalid_argument("CutTree: empty terminal set");
  if (std::adjacent_find(terminals_.begin(), terminals_.end()) != terminals_.end())
    throw std::invalid_argument("CutTree: duplicate terminal");
  if (edges_.size() + 1 != terminals_.size())
    throw std::invalid_argument("CutTree: tree must have |X|-1 edges");

  std::sort(pi_.begin(), pi_.end());
  auto dup = std::adjacent_find(pi_.begin(), pi_.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != pi_.end()) throw std::invalid_argument("CutTree: duplicate pi entry");
  auto is_terminal = [&](VertexId v) {
    return std::binary_search(terminals_.begin(), terminals_.end(), v);
  };
  for (const auto& [v, x] : pi_) {
    if (!is_terminal(x)) throw std::invalid_argument("CutTree: pi value is not a terminal");
    if (is_terminal(v) && v != x)
      throw std::invalid_argument("CutTree: pi must be the identity on terminals");
  }
  for (VertexId x : terminals_)
    if (this->pi(x) != x) throw std::invalid_argument("CutTree: terminal missing from pi");

  // connectivity over the terminals
  std::vector<std::vector<std::size_t>> adj(terminals_.size());
  auto tpos = [&](VertexId v) {
    auto it = std::lower_bound(terminals_.begin(), terminals_.end(), v);
    if (it == terminals_.end() || *it != v)
      throw std::invalid_argument("CutTree: tree edge endpoint is not a terminal");
    return static_cast<std::size_t>(it - terminals_.begin());
  };
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    adj[tpos(edges_[k].x)].push_back(k);
    adj[tpos(edges_[k].y)].push_back(k);
  }
  std::vector<char> seen(terminals_.size(), 0);
  std::vector<std::size_t> queue{0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t k : adj[queue[head]]) {
      for (VertexId end : {edges_[k].x, edges_[k].y}) {
        const std::size_t p = tpos(end);
        if (!seen[p]) {
          seen[p] = 1;
          queue.push_back(p);
        }
      }
    }
  }
  if (queue.size() != terminals_.size())
    throw std::invalid_argument("CutTree: tree edges do not span the terminals");
}

VertexId CutTree::pi(VertexId v) const {
  auto it = std::lower_bound(pi_.begin(), pi_.end(), std::make_pair(v, VertexId{0}),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it == pi_.end() || it->first != v)
    throw std::invalid_argument("CutTree: vertex outside pi domain");
  return it->second;
}

std::vector<VertexId> CutTree::induced_cut(std::size_t tree_edge) const {
  if (tree_edge >= edges_.size())
    throw std::invalid_argument("CutTree: tree edge index out of range");
  // terminal component of x after deleting the edge
  std::vector<char> in_side(terminals_.size(), 0);
  auto tpos = [&](VertexId v) {
    return static_cast<std::size_t>(
        std::lower_bound(terminals_.begin(), terminals_.end(), v) - terminals_.begin());
  };
  std::vector<std::size_t> queue{tpos(edges_[tree_edge].x)};
  in_side[queue[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId at = terminals_[queue[head]];
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (k == tree_edge) continue;
      VertexId other;
      if (edges_[k].x == at)
        other = edges_[k].y;
      else if (edges_[k].y == at)
        other = edges_[k].x;
      else
        continue;
      const std::size_t p = tpos(other);
      if (!in_side[p]) {
        in_side[p] = 1;
        queue.push_back(p);
      }
    }
  }
  std::vector<VertexId> out;
  for (const auto& [v, x] : pi_)
    if (in_side[tpos(x)]) out.push_back(v);
  return out;  // pi_ ascending by vertex id already
}

std::size_t CutTree::find_tree_edge(VertexId x, VertexId y) const {
  for (std::size_t k = 0; k < edges_.size(); ++k)
    if ((edges_[k].x == x && edges_[k].y == y) || (edges_[k].x == y && edges_[k].y == x))
      return k;
  throw std::invalid_argument("CutTree: not a tree edge");
}

CutTree gomory_hu(const Graph& g, const WeightVector& c, std::span<const VertexId> terminals) {
  if (c.size() != g.edge_count())
    throw std::invalid_argument("gomory_hu: weight vector size mismatch");
  std::vector<VertexId> x_set(terminals.begin(), terminals.end());
  std::sort(x_set.begin(), x_set.end());
  x_set.erase(std::unique(x_set.begin(), x_set.end()), x_set.end());
  if (x_set.empty()) throw std::invalid_argument("gomory_hu: empty terminal set");
  for (VertexId x : x_set)
    if (!g.has_vertex(x)) throw std::invalid_argument("gomory_hu: unknown terminal");

  struct Group {
    std::vector<VertexId> members;    // ascending
    std::vector<VertexId> terminals;  // ascending
  };
  struct Link {
    std::size_t a;
    std::size_t b;
    ExtWeight w;
  };
  std::vector<Group> groups;
  std::vector<Link> links;  // creation order, endpoints updated on splits
  groups.push_back({{g.vertices().begin(), g.vertices().end()}, x_set});

  std::vector<std::size_t> group_of(g.vertex_count(), 0);

  VertexId max_id = g.vertices().empty() ? 0 : g.vertices().back();

  while (true) {
    std::size_t split = groups.size();
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (groups[i].terminals.size() >= 2) {
        split = i;
        break;
      }
    }
    if (split == groups.size()) break;
    const VertexId s = groups[split].terminals[0];
    const VertexId t = groups[split].terminals[1];

    // components of the current tree with `split` removed
    std::vector<std::vector<std::size_t>> tadj(groups.size());
    for (std::size_t k = 0; k < links.size(); ++k) {
      tadj[links[k].a].push_back(k);
      tadj[links[k].b].push_back(k);
    }
    constexpr std::size_t none = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(groups.size(), none);
    std::size_t ncomp = 0;
    for (std::size_t start = 0; start < groups.size(); ++start) {
      if (start == split || comp[start] != none) continue;
      const std::size_t id = ncomp++;
      std::vector<std::size_t> queue{start};
      comp[start] = id;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::size_t k : tadj[queue[head]]) {
          const std::size_t other = links[k].a == queue[head] ? links[k].b : links[k].a;
          if (other != split && comp[other] == none) {
            comp[other] = id;
            queue.push_back(other);
          }
        }
      }
    }

    // contracted graph: the group's own vertices plus one blob per component
    auto blob_id = [&](std::size_t comp_index) {
      return static_cast<VertexId>(max_id + 1 + comp_index);
    };
    auto contracted_id = [&](VertexId v) {
      const std::size_t gi = group_of[g.index_of(v)];
      return gi == split ? v : blob_id(comp[gi]);
    };
    std::vector<VertexId> cverts = groups[split].members;
    for (std::size_t i = 0; i < ncomp; ++i) cverts.push_back(blob_id(i));
    std::map<std::pair<VertexId, VertexId>, ExtWeight> agg;
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& [u, v] = g.edge(e);
      VertexId cu = contracted_id(u);
      VertexId cv = contracted_id(v);
      if (cu == cv) continue;
      if (cv < cu) std::swap(cu, cv);
      agg[{cu, cv}] += c[e];
    }
    std::vector<std::pair<VertexId, VertexId>> cedges;
    WeightVector cweights;
    for (const auto& [key, w] : agg) {
      cedges.push_back(key);
      cweights.push_back(w);
    }
    const Graph contracted(cverts, cedges);
    const MinCutResult cut = min_st_cut(contracted, cweights, s, t);

    const std::vector<VertexId>& side = cut.source_side;  // ascending
    auto on_source_side = [&](VertexId v) {
      return std::binary_search(side.begin(), side.end(), v);
    };

    Group snode, tnode;
    for (VertexId v : groups[split].members)
      (on_source_side(v) ? snode : tnode).members.push_back(v);
    for (VertexId v : groups[split].terminals)
      (on_source_side(v) ? snode : tnode).terminals.push_back(v);
    assert(!snode.terminals.empty() && !tnode.terminals.empty());

    const std::size_t tindex = groups.size();
    for (Link& link : links) {
      if (link.a != split && link.b != split) continue;
      const std::size_t other = link.a == split ? link.b : link.a;
      if (!on_source_side(blob_id(comp[other])))
        (link.a == split ? link.a : link.b) = tindex;
    }
    groups[split] = std::move(snode);
    groups.push_back(std::move(tnode));
    for (VertexId v : groups[tindex].members) group_of[g.index_of(v)] = tindex;
    links.push_back({split, tindex, cut.value});
  }

  std::vector<std::pair<VertexId, VertexId>> pi;
  pi.reserve(g.vertex_count());
  for (const Group& group : groups) {
    assert(group.terminals.size() == 1);
    for (VertexId v : group.members) pi.emplace_back(v, group.terminals[0]);
  }
  std::vector<CutTree::TreeEdge> edges;
  edges.reserve(links.size());
  for (const Link& link : links)
    edges.push_back({groups[link.a].terminals[0], groups[link.b].terminals[0], link.w});
  return CutTree(std::move(x_set), std::move(pi), std::move(edges));
}

}  // namespace bmsep
