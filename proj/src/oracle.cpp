#include "bmsep/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bmsep::oracle {

namespace {

std::vector<VertexId> mask_to_set(const Graph& g, unsigned mask) {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < g.vertex_count(); ++i)
    if (mask & (1u << i)) out.push_back(g.vertices()[i]);
  return out;
}

// Edge indices crossing the mask, ascending.
std::vector<EdgeIndex> crossing_edges(const Graph& g, unsigned mask) {
  std::vector<EdgeIndex> out;
  for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
    const auto& [a, b] = g.edge(e);
    const bool ain = mask & (1u << g.index_of(a));
    const bool bin = mask & (1u << g.index_of(b));
    if (ain != bin) out.push_back(e);
  }
  return out;
}

ExtWeight mask_cut_weight(const Graph& g, const WeightVector& c, unsigned mask) {
  ExtWeight total;
  for (EdgeIndex e : crossing_edges(g, mask)) total += c[e];
  return total;
}

bool lex_less(const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Saturating sum kept as (finite part, number of infinite terms), so gray
// code updates stay O(1) even with infinities present.
struct SatSum {
  Rat finite;
  int infinite = 0;

  void add(const ExtWeight& w) {
    if (w.finite())
      finite += w.value();
    else
      ++infinite;
  }
  void sub(const ExtWeight& w) {
    if (w.finite())
      finite -= w.value();
    else
      --infinite;
  }
  ExtWeight total() const {
    return infinite > 0 ? ExtWeight::infinity() : ExtWeight(finite);
  }
};

}  // namespace

CutResult bf_min_st_cut(const Graph& g, const WeightVector& c, VertexId s, VertexId t) {
  if (g.vertex_count() > 20)
    throw std::invalid_argument("bf_min_st_cut: instance too large");
  if (s == t) throw std::invalid_argument("bf_min_st_cut: source equals sink");
  if (c.size() != g.edge_count())
    throw std::invalid_argument("bf_min_st_cut: weight vector size mismatch");
  const unsigned sbit = 1u << g.index_of(s);
  const unsigned tbit = 1u << g.index_of(t);
  const unsigned full = (1u << g.vertex_count()) - 1;

  std::optional<CutResult> best;
  for (unsigned mask = 0; mask <= full; ++mask) {
    if (!(mask & sbit) || (mask & tbit)) continue;
    ExtWeight value = mask_cut_weight(g, c, mask);
    if (!best || value < best->value) {
      best = CutResult{std::move(value), mask_to_set(g, mask)};
    } else if (value == best->value) {
      std::vector<VertexId> u = mask_to_set(g, mask);
      if (lex_less(u, best->u)) best->u = std::move(u);
    }
  }
  return *best;  // the mask with s alone always qualifies
}

CutResult bf_min_t_cut(const Graph& g, const WeightVector& c, std::span<const VertexId> t_set) {
  if (g.vertex_count() > 16)
    throw std::invalid_argument("bf_min_t_cut: instance too large");
  if (c.size() != g.edge_count())
    throw std::invalid_argument("bf_min_t_cut: weight vector size mismatch");
  std::vector<VertexId> t(t_set.begin(), t_set.end());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.empty() || t.size() % 2 != 0)
    throw std::invalid_argument("bf_min_t_cut: |T| must be even and nonzero");
  unsigned tmask = 0;
  for (VertexId v : t) tmask |= 1u << g.index_of(v);

  const unsigned full = (1u << g.vertex_count()) - 1;
  std::optional<CutResult> best;
  for (unsigned mask = 1; mask < full; ++mask) {
    if (std::popcount(mask & tmask) % 2 == 0) continue;
    ExtWeight value = mask_cut_weight(g, c, mask);
    if (!best || value < best->value) {
      best = CutResult{std::move(value), mask_to_set(g, mask)};
    } else if (value == best->value) {
      std::vector<VertexId> u = mask_to_set(g, mask);
      if (lex_less(u, best->u)) best->u = std::move(u);
    }
  }
  if (!best) throw std::logic_error("bf_min_t_cut: no T-odd set");  // unreachable for valid T
  return *best;
}

std::optional<BlossomResult> bf_min_blossom(const Graph& g, const WeightVector& c,
                                            const WeightVector& c_prime,
                                            std::span<const VertexId> t_set) {
  if (g.vertex_count() > 8)
    throw std::invalid_argument("bf_min_blossom: instance too large");
  if (c.size() != g.edge_count() || c_prime.size() != g.edge_count())
    throw std::invalid_argument("bf_min_blossom: weight vector size mismatch");
  unsigned tmask = 0;
  for (VertexId v : t_set) tmask |= 1u << g.index_of(v);

  const unsigned full = (1u << g.vertex_count()) - 1;
  std::optional<BlossomResult> best;
  for (unsigned mask = 1; mask < full; ++mask) {
    const std::vector<EdgeIndex> cut = crossing_edges(g, mask);
    if (cut.size() > 14)
      throw std::invalid_argument("bf_min_blossom: cut too large to enumerate");
    const unsigned t_in = std::popcount(mask & tmask);

    // F subsets in gray-code order: one edge toggles per step
    SatSum beta;
    for (EdgeIndex e : cut) beta.add(c[e]);
    std::vector<char> in_f(cut.size(), 0);
    unsigned fsize = 0;
    const unsigned fcount = 1u << cut.size();
    for (unsigned step = 0; step < fcount; ++step) {
      if (step > 0) {
        const unsigned j = std::countr_zero(step);
        const EdgeIndex e = cut[j];
        if (in_f[j]) {
          beta.sub(c_prime[e]);
          beta.add(c[e]);
          in_f[j] = 0;
          --fsize;
        } else {
          beta.sub(c[e]);
          beta.add(c_prime[e]);
          in_f[j] = 1;
          ++fsize;
        }
      }
      if ((t_in + fsize) % 2 == 0) continue;
      ExtWeight value = beta.total();
      const bool better = !best || value < best->beta;
      if (!better && value != best->beta) continue;
      std::vector<EdgeIndex> f;
      for (std::size_t j = 0; j < cut.size(); ++j)
        if (in_f[j]) f.push_back(cut[j]);
      std::vector<VertexId> u = mask_to_set(g, mask);
      if (better || lex_less(u, best->u) ||
          (u == best->u && std::lexicographical_compare(f.begin(), f.end(), best->f.begin(),
                                                        best->f.end())))
        best = BlossomResult{std::move(value), std::move(u), std::move(f)};
    }
  }
  return best;
}

std::optional<ViolationResult> bf_most_violated_blossom(const Instance& inst,
                                                        const FractionalPoint& x) {
  const Graph& g = inst.graph();
  if (g.vertex_count() > 6 || g.edge_count() > 10)
    throw std::invalid_argument("bf_most_violated_blossom: instance too large");
  if (x.x.size() != g.edge_count())
    throw std::invalid_argument("bf_most_violated_blossom: point size mismatch");
  const bool capacitated = inst.mode() != MatchingMode::uncapacitated;

  const unsigned full = (1u << g.vertex_count()) - 1;
  std::optional<ViolationResult> best;
  auto consider = [&](const Rat& violation, unsigned mask, const std::vector<EdgeIndex>& f) {
    const bool better = !best || violation > best->violation;
    if (!better && violation != best->violation) return;
    std::vector<VertexId> w = mask_to_set(g, mask);
    if (better || lex_less(w, best->w) ||
        (w == best->w &&
         std::lexicographical_compare(f.begin(), f.end(), best->f.begin(), best->f.end())))
      best = ViolationResult{violation, std::move(w), f};
  };

  for (unsigned mask = 1; mask <= full; ++mask) {
    long long bw = 0;
    Rat x_inside;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
      if (mask & (1u << i)) bw += inst.b_by_position()[i];
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
      const auto& [a, b] = g.edge(e);
      if ((mask & (1u << g.index_of(a))) && (mask & (1u << g.index_of(b)))) x_inside += x.x[e];
    }

    if (!capacitated) {
      if (bw % 2 == 0) continue;
      consider(x_inside - Rat((bw - 1) / 2), mask, {});
      continue;
    }

    const std::vector<EdgeIndex> cut = crossing_edges(g, mask);
    Rat x_f;
    long long u_f = 0;
    std::vector<char> in_f(cut.size(), 0);
    const unsigned fcount = 1u << cut.size();
    for (unsigned step = 0; step < fcount; ++step) {
      if (step > 0) {
        const unsigned j = std::countr_zero(step);
        const EdgeIndex e = cut[j];
        if (in_f[j]) {
          x_f -= x.x[e];
          u_f -= inst.u(e);
          in_f[j] = 0;
        } else {
          x_f += x.x[e];
          u_f += inst.u(e);
          in_f[j] = 1;
        }
      }
      if ((bw + u_f) % 2 == 0) continue;
      Rat violation = x_inside + x_f - Rat((bw + u_f - 1) / 2);
      if (best && violation < best->violation) continue;
      std::vector<EdgeIndex> f;
      for (std::size_t j = 0; j < cut.size(); ++j)
        if (in_f[j]) f.push_back(cut[j]);
      consider(violation, mask, f);
    }
  }
  if (!best || best->violation.sgn() <= 0) return std::nullopt;
  return best;
}

}  // namespace bmsep::oracle
