#include "bmsep/separation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bmsep {

Instance::Instance(Graph graph, std::vector<long long> b, std::vector<long long> u,
                   MatchingMode mode)
    : graph_(std::move(graph)), b_(std::move(b)), u_(std::move(u)), mode_(mode) {
  if (b_.size() != graph_.vertex_count())
    throw std::invalid_argument("Instance: b must cover every vertex");
  for (long long bi : b_)
    if (bi < 1) throw std::invalid_argument("Instance: vertex capacities must be positive");
  if (mode_ == MatchingMode::uncapacitated) {
    if (!u_.empty())
      throw std::invalid_argument("Instance: uncapacitated instances carry no edge capacities");
  } else {
    if (u_.size() != graph_.edge_count())
      throw std::invalid_argument("Instance: u must cover every edge");
    for (long long ue : u_)
      if (ue < 0) throw std::invalid_argument("Instance: edge capacities must be nonnegative");
  }
}

long long Instance::u(EdgeIndex e) const {
  if (mode_ == MatchingMode::uncapacitated)
    throw std::logic_error("Instance: no edge capacities in uncapacitated mode");
  if (e >= u_.size()) throw std::invalid_argument("Instance: edge index out of range");
  return u_[e];
}

Rat slack(const Instance& inst, const FractionalPoint& x, VertexId i) {
  if (x.x.size() != inst.graph().edge_count())
    throw std::invalid_argument("slack: point size mismatch");
  Rat degree;
  for (EdgeIndex e : inst.graph().incident(i)) degree += x.x[e];
  return Rat(inst.b(i)) - degree;
}

std::vector<ConstraintViolation> check_degree_and_bounds(const Instance& inst,
                                                         const FractionalPoint& x) {
  if (x.x.size() != inst.graph().edge_count())
    throw std::invalid_argument("check_degree_and_bounds: point size mismatch");
  std::vector<ConstraintViolation> out;
  for (VertexId v : inst.graph().vertices()) {
    const Rat s = slack(inst, x, v);
    if (inst.mode() == MatchingMode::perfect ? s.sgn() != 0 : s.sgn() < 0) {
      ConstraintViolation cv;
      cv.kind = ConstraintViolation::Kind::degree;
      cv.vertex = v;
      cv.amount = s.abs();
      out.push_back(std::move(cv));
    }
  }
  for (EdgeIndex e = 0; e < inst.graph().edge_count(); ++e) {
    if (x.x[e].sgn() < 0) {
      ConstraintViolation cv;
      cv.kind = ConstraintViolation::Kind::lower_bound;
      cv.edge = e;
      cv.amount = -x.x[e];
      out.push_back(std::move(cv));
    } else if (inst.mode() != MatchingMode::uncapacitated && x.x[e] > Rat(inst.u(e))) {
      ConstraintViolation cv;
      cv.kind = ConstraintViolation::Kind::upper_bound;
      cv.edge = e;
      cv.amount = x.x[e] - Rat(inst.u(e));
      out.push_back(std::move(cv));
    }
  }
  return out;
}

namespace {

struct StarTopology {
  Graph graph;
  VertexId apex;
};

// Instance graph plus an apex joined to every vertex; original edges keep
// their indices, apex edges follow in ascending vertex order.
StarTopology star_topology(const Graph& g) {
  const VertexId apex = g.vertices().empty() ? 0 : g.vertices().back() + 1;
  std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  verts.push_back(apex);
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(g.edge_count() + g.vertex_count());
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) edges.push_back(g.edge(e));
  for (VertexId v : g.vertices()) edges.emplace_back(v, apex);
  return {Graph(std::move(verts), std::move(edges)), apex};
}

std::vector<VertexId> star_t_set(const Instance& inst, VertexId apex) {
  std::vector<VertexId> t;
  long long total = 0;
  for (VertexId v : inst.graph().vertices()) {
    const long long bv = inst.b(v);
    total += bv;
    if (bv % 2 != 0) t.push_back(v);
  }
  if (total % 2 != 0) t.push_back(apex);
  return t;
}

void require_feasible(const Instance& inst, const FractionalPoint& x, const char* who) {
  if (!check_degree_and_bounds(inst, x).empty())
    throw std::invalid_argument(std::string(who) + ": point violates degree or bound constraints");
}

Rat half(Rat r) { return std::move(r) / Rat(2); }

}  // namespace

StarGraph build_star_graph(const Instance& inst, const FractionalPoint& x) {
  if (inst.mode() == MatchingMode::uncapacitated)
    throw std::invalid_argument("build_star_graph: capacitated or perfect instance required");
  require_feasible(inst, x, "build_star_graph");

  StarTopology topo = star_topology(inst.graph());
  WeightVector c, cp;
  c.reserve(topo.graph.edge_count());
  cp.reserve(topo.graph.edge_count());
  for (EdgeIndex e = 0; e < inst.graph().edge_count(); ++e) {
    const Rat& xe = x.x[e];
    const Rat rest = Rat(inst.u(e)) - xe;
    if (inst.u(e) % 2 != 0) {
      c.push_back(ExtWeight(xe));
      cp.push_back(ExtWeight(rest));
    } else {
      c.push_back(ExtWeight(xe < rest ? xe : rest));
      cp.push_back(ExtWeight::infinity());
    }
  }
  for (VertexId v : inst.graph().vertices()) {
    c.push_back(ExtWeight(slack(inst, x, v)));
    cp.push_back(ExtWeight::infinity());
  }
  std::vector<VertexId> t = star_t_set(inst, topo.apex);
  assert(t.size() % 2 == 0);
  return {std::move(topo.graph), std::move(c), std::move(cp), std::move(t), topo.apex};
}

BlossomSides blossom_lhs_rhs(const Instance& inst, const FractionalPoint& x,
                             std::span<const VertexId> w, std::span<const EdgeIndex> f) {
  if (x.x.size() != inst.graph().edge_count())
    throw std::invalid_argument("blossom_lhs_rhs: point size mismatch");
  if (inst.mode() == MatchingMode::uncapacitated && !f.empty())
    throw std::invalid_argument("blossom_lhs_rhs: F must be empty without edge capacities");

  std::vector<EdgeIndex> fset(f.begin(), f.end());
  std::sort(fset.begin(), fset.end());
  if (std::adjacent_find(fset.begin(), fset.end()) != fset.end())
    throw std::invalid_argument("blossom_lhs_rhs: duplicate edge in F");
  const std::vector<EdgeIndex> cut = delta(inst.graph(), w);
  if (!std::includes(cut.begin(), cut.end(), fset.begin(), fset.end()))
    throw std::invalid_argument("blossom_lhs_rhs: F not contained in delta(W)");

  long long bw = 0;
  for (VertexId v : w) bw += inst.b(v);
  long long uf = 0;
  for (EdgeIndex e : fset) uf += inst.u(e);
  if ((bw + uf) % 2 == 0) throw std::invalid_argument("blossom_lhs_rhs: parity violated");

  BlossomSides sides;
  sides.rhs = (bw + uf - 1) / 2;
  for (EdgeIndex e : interior_edges(inst.graph(), w)) sides.lhs += x.x[e];
  for (EdgeIndex e : fset) sides.lhs += x.x[e];

  for (VertexId v : w) sides.oddcut_lhs += slack(inst, x, v);
  for (EdgeIndex e : cut) {
    if (std::binary_search(fset.begin(), fset.end(), e))
      sides.oddcut_lhs += Rat(inst.u(e)) - x.x[e];
    else
      sides.oddcut_lhs += x.x[e];
  }

  if (sides.oddcut_lhs != Rat(1) + Rat(2) * (Rat(sides.rhs) - sides.lhs))
    throw std::logic_error("blossom_lhs_rhs: cut-form identity violated");
  return sides;
}

namespace {

// Map a star-graph blossom back to an inequality support on the original
// graph: drop the apex side, then add every even-capacity cut edge whose
// cheaper layer is u_e - x_e (those edges sit in F implicitly, the star
// graph only tracks parity-relevant membership).
std::pair<std::vector<VertexId>, std::vector<EdgeIndex>> map_back(
    const Instance& inst, const FractionalPoint& x, const StarGraph& star, const Blossom& bl) {
  std::vector<VertexId> w = bl.u;
  if (std::binary_search(w.begin(), w.end(), star.apex)) w = complement(star.graph, w);
  assert(!std::binary_search(w.begin(), w.end(), star.apex));

  std::vector<EdgeIndex> f = bl.f;
  for (EdgeIndex e : delta(inst.graph(), w)) {
    if (inst.u(e) % 2 != 0) continue;
    const Rat rest = Rat(inst.u(e)) - x.x[e];
    if (rest < x.x[e]) f.push_back(e);
  }
  std::sort(f.begin(), f.end());
  return {std::move(w), std::move(f)};
}

ViolatedBlossom make_violated(const Instance& inst, const FractionalPoint& x,
                              std::vector<VertexId> w, std::vector<EdgeIndex> f,
                              const Rat& beta) {
  const BlossomSides sides = blossom_lhs_rhs(inst, x, w, f);
  ViolatedBlossom vb;
  vb.w = std::move(w);
  vb.f = std::move(f);
  vb.rhs = sides.rhs;
  vb.lhs = sides.lhs;
  vb.violation = sides.lhs - Rat(sides.rhs);
  vb.beta = beta;
  if (vb.violation != half(Rat(1) - beta))
    throw std::logic_error("separation: violation does not match (1 - beta)/2");
  return vb;
}

}  // namespace

SeparationResult separate_capacitated(const Instance& inst, const FractionalPoint& x) {
  if (inst.mode() == MatchingMode::uncapacitated)
    throw std::invalid_argument("separate_capacitated: capacitated or perfect instance required");
  require_feasible(inst, x, "separate_capacitated");

  const StarGraph star = build_star_graph(inst, x);
  std::optional<Blossom> best = minimize_blossom(star.graph, star.c, star.c_prime, star.t_set);
  if (!best) return {std::nullopt, ExtWeight::infinity()};
  if (best->beta >= ExtWeight(1)) return {std::nullopt, best->beta};

  // beta < 1, hence finite: every F edge is an original odd-capacity edge
  assert(best->beta.finite());
  for (EdgeIndex e : best->f) assert(e < inst.graph().edge_count());
  auto [w, f] = map_back(inst, x, star, *best);
  SeparationResult result;
  result.min_beta = best->beta;
  result.violated = make_violated(inst, x, std::move(w), std::move(f), best->beta.value());
  return result;
}

SeparationResult separate_uncapacitated(const Instance& inst, const FractionalPoint& x) {
  if (inst.mode() != MatchingMode::uncapacitated)
    throw std::invalid_argument("separate_uncapacitated: uncapacitated instance required");
  require_feasible(inst, x, "separate_uncapacitated");

  StarTopology topo = star_topology(inst.graph());
  const std::vector<VertexId> t = star_t_set(inst, topo.apex);
  if (t.empty()) {
    // every b is even, so no W has b(W) odd and the family is empty
    return {std::nullopt, ExtWeight::infinity()};
  }
  WeightVector c;
  c.reserve(topo.graph.edge_count());
  for (EdgeIndex e = 0; e < inst.graph().edge_count(); ++e) c.push_back(ExtWeight(x.x[e]));
  for (VertexId v : inst.graph().vertices()) c.push_back(ExtWeight(slack(inst, x, v)));

  const TCut cut = minimum_t_cut(topo.graph, c, t);
  if (cut.value >= ExtWeight(1)) return {std::nullopt, cut.value};

  std::vector<VertexId> w = cut.u;
  if (std::binary_search(w.begin(), w.end(), topo.apex)) w = complement(topo.graph, w);
  SeparationResult result;
  result.min_beta = cut.value;
  result.violated = make_violated(inst, x, std::move(w), {}, cut.value.value());
  return result;
}

SeparationResult separate_tsp(const Graph& g, const FractionalPoint& x) {
  Instance inst(g, std::vector<long long>(g.vertex_count(), 2),
                std::vector<long long>(g.edge_count(), 1), MatchingMode::capacitated);
  return separate_capacitated(inst, x);
}

}  // namespace bmsep
