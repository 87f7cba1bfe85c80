#include "bmsep/maxflow.hpp"

#include <atomic>
#include <cassert>
#include <limits>
#include <set>
#include <stdexcept>

/* Preflow-push after Goldberg & Tarjan, "A New Approach to the Maximum
 * Flow Problem", highest-label selection with the gap heuristic.  All
 * residuals are exact rationals.  An undirected edge of capacity w becomes
 * a pair of mutually reverse arcs with residual w each, so the net flow on
 * the edge is half the residual difference of the pair. */

namespace bmsep {

namespace {

std::atomic<std::uint64_t> g_calls{0};

struct Arc {
  int to;
  std::size_t rev;
  Rat residual;
};

}  // namespace

std::uint64_t min_st_cut_calls() noexcept { return g_calls.load(std::memory_order_relaxed); }

void reset_min_st_cut_calls() noexcept { g_calls.store(0, std::memory_order_relaxed); }

MinCutResult min_st_cut(const Graph& g, const WeightVector& c, VertexId s, VertexId t) {
  if (s == t) throw std::invalid_argument("min_st_cut: source equals sink");
  if (c.size() != g.edge_count())
    throw std::invalid_argument("min_st_cut: weight vector size mismatch");
  const int si = static_cast<int>(g.index_of(s));
  const int ti = static_cast<int>(g.index_of(t));
  g_calls.fetch_add(1, std::memory_order_relaxed);

  const int n = static_cast<int>(g.vertex_count());
  const std::size_t m = g.edge_count();

  // Finite surrogate for infinite capacities: larger than the sum of all
  // finite capacities, so any cut of weight >= big crosses an infinite edge.
  Rat big(1);
  bool has_inf = false;
  for (const ExtWeight& w : c) {
    if (w.finite())
      big += w.value();
    else
      has_inf = true;
  }

  std::vector<Arc> arcs;
  arcs.reserve(2 * m);
  std::vector<std::vector<std::size_t>> adj(n);
  for (EdgeIndex e = 0; e < m; ++e) {
    const auto& [u, v] = g.edge(e);
    const Rat cap = c[e].finite() ? c[e].value() : big;
    const int ui = static_cast<int>(g.index_of(u));
    const int vi = static_cast<int>(g.index_of(v));
    const std::size_t a = arcs.size();
    arcs.push_back({vi, a + 1, cap});
    arcs.push_back({ui, a, cap});
    adj[ui].push_back(a);
    adj[vi].push_back(a + 1);
  }

  const int max_label = 2 * n;
  std::vector<int> label(n, 0);
  std::vector<Rat> excess(n);
  std::vector<std::size_t> cur(n, 0);
  std::vector<int> count(max_label + 2, 0);
  std::vector<std::set<int>> active(max_label + 1);

  label[si] = n;
  count[0] = n - 1;
  count[n] += 1;

  int hi = 0;
  auto activate = [&](int v) {
    if (v != si && v != ti && excess[v].sgn() > 0) {
      active[label[v]].insert(v);
      if (label[v] > hi) hi = label[v];
    }
  };

  for (std::size_t ai : adj[si]) {
    Arc& a = arcs[ai];
    if (a.residual.sgn() <= 0) continue;
    Rat delta = a.residual;
    a.residual -= delta;
    arcs[a.rev].residual += delta;
    bool was_zero = excess[a.to].sgn() == 0;
    excess[a.to] += delta;
    excess[si] -= delta;
    if (was_zero) activate(a.to);
  }

  while (true) {
    while (hi >= 0 && active[hi].empty()) --hi;
    if (hi < 0) break;
    const int v = *active[hi].begin();
    active[hi].erase(active[hi].begin());

    while (excess[v].sgn() > 0) {
      if (cur[v] == adj[v].size()) {
        // relabel
        int dmin = std::numeric_limits<int>::max();
        for (std::size_t ai : adj[v])
          if (arcs[ai].residual.sgn() > 0 && label[arcs[ai].to] < dmin)
            dmin = label[arcs[ai].to];
        assert(dmin < std::numeric_limits<int>::max());
        const int old = label[v];
        --count[old];
        label[v] = dmin + 1;
        assert(label[v] <= max_label);
        ++count[label[v]];
        cur[v] = 0;
        if (count[old] == 0 && old < n) {
          // gap: nodes stranded above the emptied level cannot reach t
          for (int w = 0; w < n; ++w) {
            if (label[w] > old && label[w] < n) {
              --count[label[w]];
              if (w != v) active[label[w]].erase(w);
              label[w] = n + 1;
              ++count[n + 1];
              if (w != v) activate(w);
            }
          }
        }
        continue;
      }
      Arc& a = arcs[adj[v][cur[v]]];
      if (a.residual.sgn() > 0 && label[v] == label[a.to] + 1) {
        Rat delta = excess[v] < a.residual ? excess[v] : a.residual;
        a.residual -= delta;
        arcs[a.rev].residual += delta;
        bool was_zero = excess[a.to].sgn() == 0;
        excess[a.to] += delta;
        excess[v] -= delta;
        if (was_zero) activate(a.to);
      } else {
        ++cur[v];
      }
    }
  }

  MinCutResult result;
  // source side: residual reachability from s
  std::vector<char> reached(n, 0);
  std::vector<int> queue{si};
  reached[si] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (std::size_t ai : adj[v]) {
      const Arc& a = arcs[ai];
      if (a.residual.sgn() > 0 && !reached[a.to]) {
        reached[a.to] = 1;
        queue.push_back(a.to);
      }
    }
  }
  assert(!reached[ti]);
  for (int i = 0; i < n; ++i)
    if (reached[i]) result.source_side.push_back(g.vertices()[i]);

  result.flow.reserve(m);
  for (EdgeIndex e = 0; e < m; ++e)
    result.flow.push_back((arcs[2 * e + 1].residual - arcs[2 * e].residual) / Rat(2));

  const Rat& total = excess[ti];
  if (has_inf && total >= big)
    result.value = ExtWeight::infinity();
  else
    result.value = ExtWeight(total);
  return result;
}

}  // namespace bmsep
