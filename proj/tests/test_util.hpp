#pragma once

// Shared deterministic generators for the unit and acceptance suites.

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "bmsep/graph.hpp"
#include "bmsep/separation.hpp"

namespace testutil {

using bmsep::EdgeIndex;
using bmsep::ExtWeight;
using bmsep::FractionalPoint;
using bmsep::Graph;
using bmsep::Instance;
using bmsep::MatchingMode;
using bmsep::Rat;
using bmsep::VertexId;
using bmsep::WeightVector;

struct Rng {
  std::mt19937 engine;
  explicit Rng(unsigned seed) : engine(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  }
  bool chance(int pct) { return uniform(1, 100) <= pct; }
};

inline std::vector<VertexId> vset(std::initializer_list<VertexId> ids) { return {ids}; }

inline Rat rat(long num, long den = 1) { return Rat(num, den); }

inline ExtWeight wt(long num, long den = 1) { return ExtWeight(Rat(num, den)); }

inline Graph random_graph(Rng& rng, int nmin, int nmax, int mmin, int mmax) {
  const int n = rng.uniform(nmin, nmax);
  const VertexId base = rng.chance(15) ? 10 : 1;
  const VertexId step = rng.chance(10) ? 3 : 1;
  std::vector<VertexId> verts;
  for (int i = 0; i < n; ++i) verts.push_back(base + step * static_cast<VertexId>(i));
  std::vector<std::pair<VertexId, VertexId>> edges;
  const int m = n < 2 ? 0 : rng.uniform(mmin, mmax);
  for (int e = 0; e < m; ++e) {
    int a = rng.uniform(0, n - 1);
    int b = rng.uniform(0, n - 2);
    if (b >= a) ++b;
    edges.emplace_back(verts[a], verts[b]);
  }
  return Graph(std::move(verts), std::move(edges));
}

inline WeightVector random_weights(Rng& rng, std::size_t m, int max_num = 20, int max_den = 10,
                                   int zero_pct = 10) {
  WeightVector w;
  for (std::size_t e = 0; e < m; ++e) {
    if (rng.chance(zero_pct)) {
      w.push_back(ExtWeight());
      continue;
    }
    w.push_back(ExtWeight(Rat(rng.uniform(0, max_num), rng.uniform(1, max_den))));
  }
  return w;
}

/// Weight pair (c, c') for blossom minimization: c finite, c' with optional
/// infinities, forced ties and zeros mixed in.
inline std::pair<WeightVector, WeightVector> random_blossom_weights(Rng& rng, std::size_t m,
                                                                    int inf_pct = 25) {
  WeightVector c = random_weights(rng, m, 12, 8, 15);
  WeightVector cp;
  for (std::size_t e = 0; e < m; ++e) {
    if (rng.chance(inf_pct)) {
      cp.push_back(ExtWeight::infinity());
    } else if (rng.chance(25)) {
      cp.push_back(c[e]);  // forced tie
    } else {
      cp.push_back(ExtWeight(Rat(rng.uniform(0, 12), rng.uniform(1, 8))));
    }
  }
  return {std::move(c), std::move(cp)};
}

inline std::vector<VertexId> random_even_subset(Rng& rng, std::span<const VertexId> verts,
                                                int empty_pct = 15) {
  std::vector<VertexId> pool(verts.begin(), verts.end());
  std::shuffle(pool.begin(), pool.end(), rng.engine);
  if (rng.chance(empty_pct)) return {};
  const int pairs = rng.uniform(0, static_cast<int>(pool.size()) / 2);
  pool.resize(2 * static_cast<std::size_t>(pairs));
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline std::vector<VertexId> random_even_nonempty_subset(Rng& rng,
                                                         std::span<const VertexId> verts) {
  while (true) {
    std::vector<VertexId> t = random_even_subset(rng, verts, 0);
    if (!t.empty()) return t;
  }
}

struct GeneratedCase {
  Instance instance;
  FractionalPoint point;
};

/// Random degree/bound feasible fractional point for a fresh capacitated or
/// uncapacitated instance on g, with b <= 3 and u <= 3 throughout (the
/// point is scaled down when a fractional degree exceeds 3).
inline GeneratedCase random_feasible_case(Rng& rng, Graph g, MatchingMode mode) {
  const std::size_t m = g.edge_count();
  std::vector<long long> u;
  FractionalPoint x;
  for (std::size_t e = 0; e < m; ++e) {
    const long long ue = rng.uniform(mode == MatchingMode::uncapacitated ? 1 : 0, 3);
    const int den = rng.uniform(1, 6);
    long long cap = mode == MatchingMode::uncapacitated ? 3 : ue;
    x.x.push_back(Rat(rng.uniform(0, static_cast<int>(cap) * den), den));
    if (mode != MatchingMode::uncapacitated) u.push_back(ue);
  }
  Rat max_degree;
  for (VertexId v : g.vertices()) {
    Rat degree;
    for (EdgeIndex e : g.incident(v)) degree += x.x[e];
    if (degree > max_degree) max_degree = degree;
  }
  if (max_degree > Rat(3))
    for (Rat& xe : x.x) xe = xe * Rat(3) / max_degree;
  std::vector<long long> b;
  for (VertexId v : g.vertices()) {
    Rat degree;
    for (EdgeIndex e : g.incident(v)) degree += x.x[e];
    long long bv = degree.ceil().to_ll() + rng.uniform(0, 1);
    if (bv < 1) bv = 1;
    if (bv > 3) bv = 3;
    b.push_back(bv);
  }
  Instance inst(std::move(g), std::move(b), std::move(u), mode);
  return {std::move(inst), std::move(x)};
}

/// Perfect-mode case: start from an integral matching covering every
/// vertex, average it with degree-preserving variants (alternating +-1
/// along parallel pairs and 4-cycles), and set b to the common degrees.
inline std::optional<GeneratedCase> random_perfect_case(Rng& rng, Graph g) {
  const std::size_t m = g.edge_count();
  std::vector<long long> u;
  for (std::size_t e = 0; e < m; ++e) u.push_back(rng.uniform(1, 3));

  std::vector<long long> y(m);
  for (std::size_t e = 0; e < m; ++e) y[e] = rng.uniform(0, 1);
  for (VertexId v : g.vertices()) {
    long long deg = 0;
    for (EdgeIndex e : g.incident(v)) deg += y[e];
    if (deg > 0) continue;
    bool fixed = false;
    for (EdgeIndex e : g.incident(v)) {
      if (y[e] < u[e]) {
        ++y[e];
        fixed = true;
        break;
      }
    }
    if (!fixed) return std::nullopt;  // vertex cannot be covered
  }

  std::vector<long long> b;
  for (VertexId v : g.vertices()) {
    long long deg = 0;
    for (EdgeIndex e : g.incident(v)) deg += y[e];
    if (deg > 3) return std::nullopt;  // keep instances within b <= 3
    b.push_back(deg);
  }

  // even closed structures available for degree-preserving moves
  std::vector<std::pair<EdgeIndex, EdgeIndex>> pairs;
  for (EdgeIndex e = 0; e < m; ++e)
    for (EdgeIndex f = e + 1; f < m; ++f) {
      auto [a1, b1] = g.edge(e);
      auto [a2, b2] = g.edge(f);
      if (std::minmax(a1, b1) == std::minmax(a2, b2)) pairs.emplace_back(e, f);
    }
  std::vector<std::array<EdgeIndex, 4>> cycles;
  const auto verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  auto edge_between = [&](VertexId a, VertexId c) -> std::optional<EdgeIndex> {
    for (EdgeIndex e : g.incident(a)) {
      const auto& [p, q] = g.edge(e);
      if (p == c || q == c) return e;
    }
    return std::nullopt;
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          auto e1 = edge_between(verts[i], verts[j]);
          auto e2 = edge_between(verts[j], verts[k]);
          auto e3 = edge_between(verts[k], verts[l]);
          auto e4 = edge_between(verts[l], verts[i]);
          if (e1 && e2 && e3 && e4) cycles.push_back({*e1, *e2, *e3, *e4});
        }

  const int variants = rng.uniform(1, 3);
  std::vector<std::vector<long long>> ys{y};
  for (int v = 1; v < variants; ++v) {
    std::vector<long long> yv = y;
    for (int attempt = 0; attempt < 8; ++attempt) {
      const bool use_pair = !pairs.empty() && (cycles.empty() || rng.chance(50));
      std::vector<EdgeIndex> walk;
      if (use_pair) {
        const auto& [e, f] = pairs[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(pairs.size()) - 1))];
        walk = {e, f};
      } else if (!cycles.empty()) {
        const auto& cyc = cycles[static_cast<std::size_t>(
            rng.uniform(0, static_cast<int>(cycles.size()) - 1))];
        walk = {cyc[0], cyc[1], cyc[2], cyc[3]};
      } else {
        break;
      }
      const int dir = rng.chance(50) ? 1 : -1;
      bool ok = true;
      for (std::size_t i = 0; i < walk.size(); ++i) {
        const long long next = yv[walk[i]] + (i % 2 == 0 ? dir : -dir);
        if (next < 0 || next > u[walk[i]]) ok = false;
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < walk.size(); ++i) yv[walk[i]] += (i % 2 == 0 ? dir : -dir);
    }
    ys.push_back(std::move(yv));
  }

  FractionalPoint x;
  for (std::size_t e = 0; e < m; ++e) {
    long long sum = 0;
    for (const auto& yv : ys) sum += yv[e];
    x.x.push_back(Rat(sum, static_cast<long>(ys.size())));
  }
  Instance inst(std::move(g), std::move(b), std::move(u), MatchingMode::perfect);
  return GeneratedCase{std::move(inst), std::move(x)};
}

/// Edge-distinct cycle found by a random walk, or nothing.
inline std::optional<std::vector<EdgeIndex>> random_cycle(Rng& rng, const Graph& g) {
  if (g.vertex_count() == 0 || g.edge_count() == 0) return std::nullopt;
  for (int attempt = 0; attempt < 12; ++attempt) {
    const auto verts = g.vertices();
    VertexId at = verts[static_cast<std::size_t>(rng.uniform(0, (int)verts.size() - 1))];
    std::vector<VertexId> vpath{at};
    std::vector<EdgeIndex> epath;
    std::vector<char> used(g.edge_count(), 0);
    for (int step = 0; step < 24; ++step) {
      std::vector<EdgeIndex> options;
      for (EdgeIndex e : g.incident(at))
        if (!used[e]) options.push_back(e);
      if (options.empty()) break;
      const EdgeIndex e =
          options[static_cast<std::size_t>(rng.uniform(0, (int)options.size() - 1))];
      used[e] = 1;
      const auto& [a, b] = g.edge(e);
      at = (a == at) ? b : a;
      epath.push_back(e);
      const auto seen = std::find(vpath.begin(), vpath.end(), at);
      if (seen != vpath.end()) {
        // closed part of the walk
        const std::size_t from = static_cast<std::size_t>(seen - vpath.begin());
        return std::vector<EdgeIndex>(epath.begin() + from, epath.end());
      }
      vpath.push_back(at);
    }
  }
  return std::nullopt;
}

/// Tight case: x = 1/2 along a cycle and integral elsewhere, so fractional
/// degrees are integers; b equals the degree (perfect) or sits within one
/// of it.  Half-integral odd cycles are the classic violated points.
inline std::optional<GeneratedCase> random_halfcycle_case(Rng& rng, Graph g, MatchingMode mode) {
  const auto cycle = random_cycle(rng, g);
  if (!cycle) return std::nullopt;
  const std::size_t m = g.edge_count();
  std::vector<long long> u;
  for (std::size_t e = 0; e < m; ++e) u.push_back(rng.uniform(1, 3));

  FractionalPoint x;
  x.x.assign(m, Rat());
  for (EdgeIndex e = 0; e < m; ++e)
    if (rng.chance(40)) x.x[e] = Rat(1);
  for (EdgeIndex e : *cycle) x.x[e] = Rat(1, 2);

  std::vector<long long> b;
  for (VertexId v : g.vertices()) {
    Rat degree;
    for (EdgeIndex e : g.incident(v)) degree += x.x[e];
    if (!degree.is_integer()) return std::nullopt;  // open half-walk remnants
    long long bv = degree.to_ll();
    if (bv > 3) return std::nullopt;
    if (mode != MatchingMode::perfect && bv < 3 && rng.chance(15)) ++bv;
    if (bv < 1) {
      if (mode == MatchingMode::perfect) {
        // raise an incident integral edge to cover the vertex
        bool fixed = false;
        for (EdgeIndex e : g.incident(v)) {
          if (x.x[e].is_integer() && x.x[e] < Rat(u[e])) {
            x.x[e] += Rat(1);
            fixed = true;
            break;
          }
        }
        if (!fixed) return std::nullopt;
      } else {
        bv = 1;
      }
    }
    b.push_back(bv);
  }
  if (mode == MatchingMode::perfect) {
    // degrees moved while covering vertices; recompute
    b.clear();
    for (VertexId v : g.vertices()) {
      Rat degree;
      for (EdgeIndex e : g.incident(v)) degree += x.x[e];
      if (!degree.is_integer() || degree.sgn() <= 0 || degree > Rat(3)) return std::nullopt;
      b.push_back(degree.to_ll());
    }
  }
  if (mode == MatchingMode::uncapacitated) u.clear();
  Instance inst(std::move(g), std::move(b), std::move(u), mode);
  if (!check_degree_and_bounds(inst, x).empty()) return std::nullopt;
  return GeneratedCase{std::move(inst), std::move(x)};
}

struct CommandResult {
  int status = -1;
  std::string out;
};

/// Runs a shell command, capturing stdout; exit status of the child.
inline CommandResult run_command(const std::string& cmd) {
  CommandResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int rc = pclose(pipe);
  if (WIFEXITED(rc)) r.status = WEXITSTATUS(rc);
  return r;
}

}  // namespace testutil
