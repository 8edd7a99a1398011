#ifndef MVI_GENERATORS_HPP
#define MVI_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "mvi/errors.hpp"
#include "mvi/graph.hpp"
#include "mvi/polyring.hpp"

namespace mvi {

/// Two-hub configuration behind a type III binomial: both hubs are
/// adjacent to every middle vertex, and the middle edge weights d_k
/// satisfy 1 <= d_k <= q-2 with sum q-1 (or alpha*(q-1) for the
/// generalized family).
struct TypeIIIConfig {
  Vertex hub_a, hub_b;
  std::vector<Vertex> middle;
  std::vector<int> weights;
};

/// t_i^{q-1} - t_1^{q-1} for i = 2..s. Together with the 4-cycle quadrics
/// these give the same ideal as the full pairwise family.
inline std::vector<Binomial> type_i(const MultipartiteGraph& g, int q) {
  std::vector<Binomial> out;
  const int s = g.s();
  for (int i = 2; i <= s; ++i) {
    ExponentVector plus(s, 0), minus(s, 0);
    plus[i - 1] = q - 1;
    minus[0] = q - 1;
    out.emplace_back(std::move(plus), std::move(minus));
  }
  return out;
}

/// The full family t_i^{q-1} - t_j^{q-1}, i < j.
inline std::vector<Binomial> type_i_pairwise(const MultipartiteGraph& g, int q) {
  std::vector<Binomial> out;
  const int s = g.s();
  for (int i = 1; i <= s; ++i)
    for (int j = i + 1; j <= s; ++j) {
      ExponentVector plus(s, 0), minus(s, 0);
      plus[i - 1] = q - 1;
      minus[j - 1] = q - 1;
      out.emplace_back(std::move(plus), std::move(minus));
    }
  return out;
}

/// One quadric t_i*t_k - t_j*t_l per 4-cycle, opposite edges multiplied
/// together.
inline std::vector<Binomial> type_ii(const MultipartiteGraph& g) {
  std::vector<Binomial> out;
  for (const auto& cyc : four_cycles(g)) {
    ExponentVector plus(g.s(), 0), minus(g.s(), 0);
    plus[cyc[0] - 1] += 1;
    plus[cyc[2] - 1] += 1;
    minus[cyc[1] - 1] += 1;
    minus[cyc[3] - 1] += 1;
    out.emplace_back(std::move(plus), std::move(minus));
  }
  return out;
}

namespace detail {

// compositions of `total` into `parts` entries within [lo, hi], in
// colexicographic order
inline std::vector<std::vector<int>> compositions(int total, int parts, int lo, int hi) {
  std::vector<std::vector<int>> out;
  if (parts <= 0 || total < parts * lo || total > parts * hi) return out;
  std::vector<int> cur(parts);
  // fill from the last position down so the output is colex-ordered
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos < 0) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    for (int d = lo; d <= hi; ++d) {
      if (remaining - d < pos * lo || remaining - d > pos * hi) continue;
      cur[pos] = d;
      self(self, pos - 1, remaining - d);
    }
  };
  rec(rec, parts - 1, total);
  return out;
}

inline Binomial type_iii_binomial(const TypeIIIConfig& cfg, const MultipartiteGraph& g) {
  ExponentVector plus(g.s(), 0), minus(g.s(), 0);
  for (std::size_t k = 0; k < cfg.middle.size(); ++k) {
    plus[g.edge_index(cfg.hub_a, cfg.middle[k]) - 1] += cfg.weights[k];
    minus[g.edge_index(cfg.hub_b, cfg.middle[k]) - 1] += cfg.weights[k];
  }
  return Binomial(std::move(plus), std::move(minus));
}

}  // namespace detail

/// All type III configurations with their binomials. Hub pairs are
/// deduplicated by hub_a < hub_b (swapping hubs only negates the
/// binomial); middles are increasing vertex sequences; weight tuples run
/// in colex order. Empty for q = 2, where 1 <= d_k <= q-2 has no
/// solutions.
inline std::vector<std::pair<TypeIIIConfig, Binomial>> type_iii_with_configs(
    const MultipartiteGraph& g, int q) {
  std::vector<std::pair<TypeIIIConfig, Binomial>> out;
  if (q < 3) return out;
  const int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      std::vector<Vertex> common;
      for (Vertex v = 0; v < n; ++v)
        if (v != a && v != b && g.is_edge(a, v) && g.is_edge(b, v)) common.push_back(v);
      const int cmax = std::min<int>(static_cast<int>(common.size()), q - 1);
      if (cmax < 2) continue;
      // increasing middle subsets of each size, by odometer over indices
      for (int np = 2; np <= cmax; ++np) {
        std::vector<int> pick(np);
        for (int i = 0; i < np; ++i) pick[i] = i;
        for (;;) {
          std::vector<Vertex> middle(np);
          for (int i = 0; i < np; ++i) middle[i] = common[pick[i]];
          for (const auto& d : detail::compositions(q - 1, np, 1, q - 2)) {
            TypeIIIConfig cfg{a, b, middle, d};
            Binomial f = detail::type_iii_binomial(cfg, g);
            out.emplace_back(std::move(cfg), std::move(f));
          }
          int pos = np - 1;
          while (pos >= 0 && pick[pos] == static_cast<int>(common.size()) - np + pos) --pos;
          if (pos < 0) break;
          ++pick[pos];
          for (int i = pos + 1; i < np; ++i) pick[i] = pick[i - 1] + 1;
        }
      }
    }
  return out;
}

inline std::vector<Binomial> type_iii(const MultipartiteGraph& g, int q) {
  std::vector<Binomial> out;
  for (auto& [cfg, f] : type_iii_with_configs(g, q)) out.push_back(std::move(f));
  return out;
}

/// Binomial of a configuration whose weights sum to alpha*(q-1); for
/// alpha = 1 this is exactly a type III generator, and for alpha >= 2 it
/// lies in the ideal the type III family generates.
inline Binomial generalized_type_iii(const TypeIIIConfig& cfg, const MultipartiteGraph& g, int q) {
  const int np = static_cast<int>(cfg.middle.size());
  if (np < 2) throw InvalidConfig("need at least 2 middle vertices");
  if (cfg.weights.size() != cfg.middle.size())
    throw InvalidConfig("weights/middle size mismatch");
  if (cfg.hub_a == cfg.hub_b) throw InvalidConfig("hubs must be distinct");
  int sum = 0;
  for (int d : cfg.weights) {
    if (d < 1 || d > q - 2) throw InvalidConfig("weights must lie in [1, q-2]");
    sum += d;
  }
  if (sum <= 0 || sum % (q - 1) != 0) throw InvalidConfig("weights must sum to a multiple of q-1");
  std::vector<Vertex> seen = cfg.middle;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidConfig("middle vertices must be distinct");
  for (Vertex v : cfg.middle) {
    if (v == cfg.hub_a || v == cfg.hub_b) throw InvalidConfig("middle vertex collides with a hub");
    if (!g.is_edge(cfg.hub_a, v) || !g.is_edge(cfg.hub_b, v))
      throw InvalidConfig("hubs must be adjacent to every middle vertex");
  }
  return detail::type_iii_binomial(cfg, g);
}

/// Rewrites t^a by transferring alpha*(q-1) units of weight at v0 onto
/// w0, moving each unit along a shared middle vertex: weight d_k leaves
/// edge {v0,m_k} and lands on {w0,m_k}. The difference t^a - t^b is a
/// generalized type III multiple, so it vanishes on X; every vertex other
/// than v0 and w0 keeps its weighted degree.
inline ExponentVector move_weight(const ExponentVector& m, Vertex v0,
                                  const std::vector<int>& edge_subset, Vertex w0, int alpha,
                                  const MultipartiteGraph& g, int q) {
  if (static_cast<int>(m.size()) != g.s())
    throw LengthMismatch("exponent vector length differs from edge count");
  if (edge_subset.size() < 2) throw TooFewEdges("need at least 2 edges in the subset");
  if (alpha < 1) throw InvalidConfig("alpha must be positive");
  if (w0 == v0) throw NotAdjacent("w0 must differ from v0");
  long long available = 0;
  std::vector<Vertex> other(edge_subset.size());
  for (std::size_t k = 0; k < edge_subset.size(); ++k) {
    const Edge& e = g.edge(edge_subset[k]);
    if (e.u != v0 && e.v != v0)
      throw NotAdjacent("subset edge " + std::to_string(edge_subset[k]) + " is not incident to v0");
    other[k] = e.u == v0 ? e.v : e.u;
    if (!g.is_edge(w0, other[k]))
      throw NotAdjacent("w0 is not adjacent to vertex " + std::to_string(other[k]));
    available += m[edge_subset[k] - 1];
  }
  const long long need = static_cast<long long>(alpha) * (q - 1);
  if (available < need) throw InsufficientWeight("subset weight below alpha*(q-1)");

  ExponentVector result = m;
  long long remaining = need;
  for (std::size_t k = 0; k < edge_subset.size() && remaining > 0; ++k) {
    const int take = static_cast<int>(std::min<long long>(result[edge_subset[k] - 1], remaining));
    if (take == 0) continue;
    result[edge_subset[k] - 1] -= take;
    result[g.edge_index(w0, other[k]) - 1] += take;
    remaining -= take;
  }
  return result;
}

/// Repeatedly applies 4-cycle swaps so that the weight between vi and
/// V \ P_j becomes min{wt(vi), Delta_j}, without changing any weighted
/// degree. Each step removes one unit from an edge vi-P_j and one from an
/// edge inside V \ P_j that avoids vi, rerouting them across the cycle.
inline ExponentVector swap_endpoints(const ExponentVector& m, int part_i, int part_j, Vertex vi,
                                     const MultipartiteGraph& g) {
  if (static_cast<int>(m.size()) != g.s())
    throw LengthMismatch("exponent vector length differs from edge count");
  if (part_i == part_j) throw InvalidConfig("parts must differ");
  if (part_i < 0 || part_i >= g.r() || part_j < 0 || part_j >= g.r())
    throw InvalidConfig("part index out of range");
  if (g.part_of(vi) != part_i) throw InvalidConfig("vi does not lie in part i");

  ExponentVector cur = m;
  auto state = [&] {
    int wt_vi = 0, delta = 0, total = 0;
    for (int i = 1; i <= g.s(); ++i) {
      const int w = cur[i - 1];
      if (w == 0) continue;
      const Edge& e = g.edge(i);
      const bool u_in_j = g.part_of(e.u) == part_j;
      const bool v_in_j = g.part_of(e.v) == part_j;
      if (e.u == vi || e.v == vi) wt_vi += w;
      if (!u_in_j && !v_in_j) {
        total += w;
        if (e.u == vi || e.v == vi) delta += w;
      }
    }
    return std::array<int, 3>{wt_vi, delta, total};
  };

  // the lemma's hypothesis: an edge inside V \ P_j avoiding vi
  auto find_hypothesis_edge = [&]() -> int {
    for (int i = 1; i <= g.s(); ++i) {
      if (cur[i - 1] == 0) continue;
      const Edge& e = g.edge(i);
      if (e.u == vi || e.v == vi) continue;
      if (g.part_of(e.u) != part_j && g.part_of(e.v) != part_j) return i;
    }
    return 0;
  };
  if (find_hypothesis_edge() == 0)
    throw NoSwappableEdge("no edge inside V \\ P_j avoiding vi");

  auto [wt_vi, delta, total] = state();
  int target = std::min(wt_vi, total);

  while (delta < target) {
    const int hyp = find_hypothesis_edge();
    if (hyp == 0) throw NoSwappableEdge("no edge inside V \\ P_j avoiding vi");
    Vertex w1 = g.edge(hyp).u, w2 = g.edge(hyp).v;
    if (g.part_of(w1) == part_i) std::swap(w1, w2);  // ensure w1 outside P_i
    // an edge from vi into P_j exists because wt(vi) > delta
    int into = 0;
    for (int i = 1; i <= g.s(); ++i) {
      if (cur[i - 1] == 0) continue;
      const Edge& e = g.edge(i);
      if (e.u != vi && e.v != vi) continue;
      const Vertex w3 = e.u == vi ? e.v : e.u;
      if (g.part_of(w3) == part_j) {
        into = i;
        break;
      }
    }
    if (into == 0) throw NoSwappableEdge("no edge from vi into P_j");
    const Vertex w3 = g.edge(into).u == vi ? g.edge(into).v : g.edge(into).u;
    cur[into - 1] -= 1;
    cur[hyp - 1] -= 1;
    cur[g.edge_index(vi, w1) - 1] += 1;
    cur[g.edge_index(w2, w3) - 1] += 1;
    delta += 1;
  }
  return cur;
}

/// The extremal monomial of degree alpha_1*(q-2): weight q-2 on the edge
/// {v2,v3} and on every edge {w,v2} with w in P_1 \ {v1}. Requires r >= 3,
/// parts sorted so alpha_1 is the (strictly meaningful) largest with
/// alpha_1 >= 2, and q >= 3.
inline ExponentVector witness_monomial(const MultipartiteGraph& g, int q) {
  if (g.r() < 3) throw Unsupported("witness monomial needs r >= 3");
  const auto& alphas = g.spec().alphas;
  if (alphas[0] < 2) throw Unsupported("witness monomial needs alpha_1 >= 2");
  if (alphas[0] != *std::max_element(alphas.begin(), alphas.end()))
    throw Unsupported("parts must be sorted so the first is largest");
  if (q < 3) throw Unsupported("witness monomial needs q >= 3");
  const Vertex v1 = g.part_begin(0);
  const Vertex v2 = g.part_begin(1);
  const Vertex v3 = g.part_begin(2);
  ExponentVector m(g.s(), 0);
  m[g.edge_index(v2, v3) - 1] = q - 2;
  for (Vertex w = v1 + 1; w < v1 + alphas[0]; ++w) m[g.edge_index(w, v2) - 1] = q - 2;
  return m;
}

}  // namespace mvi

#endif
