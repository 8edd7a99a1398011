#ifndef MVI_GROEBNER_HPP
#define MVI_GROEBNER_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "mvi/errors.hpp"
#include "mvi/finite_field.hpp"
#include "mvi/generators.hpp"
#include "mvi/graph.hpp"
#include "mvi/polyring.hpp"

namespace mvi {

struct Ideal {
  std::vector<Polynomial> gens;
  int nvars = 0;
  const FieldTable* field = nullptr;
};

/// Drops zero generators and validates the ambient ring.
inline Ideal make_ideal(const FieldTable& field, int nvars, std::vector<Polynomial> gens) {
  Ideal I{{}, nvars, &field};
  for (Polynomial& p : gens) {
    if (p.is_zero()) continue;
    if (p.nvars() != nvars) throw AmbientMismatch("generator has wrong variable count");
    if (p.field().order() != field.order()) throw FieldMismatch("generator over wrong field");
    I.gens.push_back(std::move(p));
  }
  return I;
}

inline Ideal ideal_from_binomials(const FieldTable& field, int nvars,
                                  const std::vector<Binomial>& bs) {
  std::vector<Polynomial> gens;
  gens.reserve(bs.size());
  for (const Binomial& b : bs) gens.push_back(Polynomial::from_binomial(field, b));
  return make_ideal(field, nvars, std::move(gens));
}

struct GroebnerBasis {
  std::vector<Polynomial> basis;  // monic, sorted by leading term ascending
  MonomialOrder order;
  bool reduced = false;
  int nvars = 0;
  const FieldTable* field = nullptr;
};

inline Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                               const MonomialOrder& ord) {
  const auto [ltf, lcf] = f.leading_term(ord);
  const auto [ltg, lcg] = g.leading_term(ord);
  const ExponentVector gamma = exp_lcm(ltf, ltg);
  const FieldTable& F = f.field();
  return f.times_term(exp_sub(gamma, ltf), F.inv(lcf)) -
         g.times_term(exp_sub(gamma, ltg), F.inv(lcg));
}

/// Remainder of full division by `basis`: no term of the result is
/// divisible by any basis leading term. The reducer is always the first
/// element in basis order whose leading term divides, so the result is
/// deterministic.
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord) {
  const FieldTable& F = p.field();
  std::vector<std::pair<ExponentVector, FieldElement>> lts;
  lts.reserve(basis.size());
  for (const Polynomial& g : basis) lts.push_back(g.leading_term(ord));

  Polynomial h = p;
  Polynomial r(F, p.nvars());
  while (!h.is_zero()) {
    const auto [lt, lc] = h.leading_term(ord);
    bool reduced_step = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (!exp_divides(lts[k].first, lt)) continue;
      h = h - basis[k].times_term(exp_sub(lt, lts[k].first), F.div(lc, lts[k].second));
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      r.add_term(lt, lc);
      h = h - Polynomial::monomial(F, lt, lc);
    }
  }
  return r;
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (p.nvars() != gb.nvars) throw AmbientMismatch("polynomial has wrong variable count");
  return normal_form(p, gb.basis, gb.order);
}

/// Buchberger with normal pair selection (smallest lcm degree first) and
/// the coprime-leading-term criterion, followed by minimalization and
/// tail interreduction. The result is the reduced basis, unique for the
/// ideal and order.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord) {
  const FieldTable& F = *I.field;
  GroebnerBasis gb{{}, ord, true, I.nvars, I.field};
  std::vector<Polynomial> basis;
  std::vector<ExponentVector> lts;

  auto push = [&](Polynomial p) {
    const auto [lt, lc] = p.leading_term(ord);
    basis.push_back(p.scaled(F.inv(lc)));
    lts.push_back(lt);
  };

  using PairKey = std::tuple<int, int, int>;  // (lcm degree, i, j)
  std::priority_queue<PairKey, std::vector<PairKey>, std::greater<>> pairs;
  auto queue_pairs_with = [&](int j) {
    for (int i = 0; i < j; ++i)
      pairs.emplace(total_degree(exp_lcm(lts[i], lts[j])), i, j);
  };

  for (const Polynomial& p : I.gens) {
    if (p.is_zero()) continue;
    push(p);
    queue_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  while (!pairs.empty()) {
    const auto [deg, i, j] = pairs.top();
    pairs.pop();
    if (exp_coprime(lts[i], lts[j])) continue;
    Polynomial rem = normal_form(s_polynomial(basis[i], basis[j], ord), basis, ord);
    if (rem.is_zero()) continue;
    push(std::move(rem));
    queue_pairs_with(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: drop elements whose leading term another one divides
  std::vector<int> order_idx(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(),
            [&](int a, int b) { return compare(ord, lts[a], lts[b]) < 0; });
  std::vector<Polynomial> minimal;
  std::vector<ExponentVector> minimal_lts;
  for (int idx : order_idx) {
    bool dominated = false;
    for (const ExponentVector& lt : minimal_lts)
      if (exp_divides(lt, lts[idx])) {
        dominated = true;
        break;
      }
    if (!dominated) {
      minimal.push_back(basis[idx]);
      minimal_lts.push_back(lts[idx]);
    }
  }

  // interreduce tails until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others, ord);
      const auto [lt, lc] = r.leading_term(ord);
      r = r.scaled(F.inv(lc));
      if (!(r == minimal[i])) {
        minimal[i] = std::move(r);
        changed = true;
      }
    }
  }

  gb.basis = std::move(minimal);
  return gb;
}

/// Toric ideal of the edge subring, presented by the 4-cycle quadrics.
inline Ideal toric_ideal_PG(const MultipartiteGraph& g, const FieldTable& field) {
  return ideal_from_binomials(field, g.s(), type_ii(g));
}

/// (I : (prod of var_product)^infty) by the inverse-variable trick:
/// adjoin y, add y*prod - 1, eliminate y with a block order.
inline Ideal saturate(const Ideal& I, const std::vector<int>& var_product) {
  const FieldTable& F = *I.field;
  const int s = I.nvars;
  std::vector<Polynomial> ext;
  ext.reserve(I.gens.size() + 1);
  for (const Polynomial& p : I.gens) {
    Polynomial q(F, s + 1);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector e2 = e;
      e2.push_back(0);
      q.add_term(e2, c);
    }
    ext.push_back(std::move(q));
  }
  ExponentVector rel(s + 1, 0);
  rel[s] = 1;
  for (int v : var_product) {
    if (v < 1 || v > s) throw AmbientMismatch("variable index out of range");
    rel[v - 1] += 1;
  }
  Polynomial r = Polynomial::monomial(F, rel, F.one());
  r.add_term(ExponentVector(s + 1, 0), F.neg(F.one()));
  ext.push_back(std::move(r));

  MonomialOrder elim = MonomialOrder::grevlex(s + 1);
  elim.elim_vars = {s + 1};
  GroebnerBasis gb = buchberger(make_ideal(F, s + 1, std::move(ext)), elim);

  std::vector<Polynomial> projected;
  for (const Polynomial& p : gb.basis) {
    bool has_y = false;
    for (const auto& [e, c] : p.terms())
      if (e[s] > 0) {
        has_y = true;
        break;
      }
    if (has_y) continue;
    Polynomial q(F, s);
    for (const auto& [e, c] : p.terms()) {
      ExponentVector e2(e.begin(), e.end() - 1);
      q.add_term(e2, c);
    }
    projected.push_back(std::move(q));
  }
  return make_ideal(F, s, std::move(projected));
}

/// Equality as ideals: identical reduced bases under the given order.
inline bool ideal_equal(const Ideal& A, const Ideal& B, const MonomialOrder& ord) {
  if (A.nvars != B.nvars) throw AmbientMismatch("ideals in different rings");
  if (A.field->order() != B.field->order()) throw AmbientMismatch("ideals over different fields");
  const GroebnerBasis ga = buchberger(A, ord);
  const GroebnerBasis gd = buchberger(B, ord);
  if (ga.basis.size() != gd.basis.size()) return false;
  for (std::size_t i = 0; i < ga.basis.size(); ++i)
    if (!(ga.basis[i] == gd.basis[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Hilbert series of the initial ideal

/// Univariate polynomial with integer coefficients, index = degree.
using UniPoly = std::vector<long long>;

namespace detail {

inline UniPoly uni_trim(UniPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
  UniPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return uni_trim(std::move(c));
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return uni_trim(std::move(c));
}

inline UniPoly uni_shift(const UniPoly& a, int k) {
  if (a.empty()) return {};
  UniPoly c(a.size() + k, 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i + k] = a[i];
  return c;
}

inline void minimalize_monomials(std::vector<ExponentVector>& gens) {
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    return total_degree(a) < total_degree(b);
  });
  std::vector<ExponentVector> kept;
  for (const ExponentVector& g : gens) {
    bool dominated = false;
    for (const ExponentVector& k : kept)
      if (exp_divides(k, g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(g);
  }
  gens = std::move(kept);
}

/// Numerator N(t) of the Hilbert series N(t)/(1-t)^nvars of S/M for the
/// monomial ideal M given by (minimal) generators. Splits on a shared
/// variable x via N(M) = N(M + (x)) + t*N(M : x); variable-disjoint
/// generator sets are a complete intersection, contributing
/// prod(1 - t^deg).
inline UniPoly hilbert_numerator(std::vector<ExponentVector> gens, int nvars) {
  minimalize_monomials(gens);
  if (gens.empty()) return {1};
  if (total_degree(gens.front()) == 0) return {0};

  // pivot: variable occurring in the most generators
  std::vector<int> count(nvars, 0);
  for (const ExponentVector& g : gens)
    for (int v = 0; v < nvars; ++v)
      if (g[v] > 0) ++count[v];
  int pivot = -1, best = 1;
  for (int v = 0; v < nvars; ++v)
    if (count[v] > best) {
      best = count[v];
      pivot = v;
    }

  if (pivot < 0) {  // supports pairwise disjoint
    UniPoly acc{1};
    for (const ExponentVector& g : gens) {
      UniPoly factor(total_degree(g) + 1, 0);
      factor[0] = 1;
      factor[total_degree(g)] -= 1;
      acc = uni_mul(acc, factor);
    }
    return acc;
  }

  std::vector<ExponentVector> plus_x;  // M + (x): x plus all gens without x
  ExponentVector unit(nvars, 0);
  unit[pivot] = 1;
  plus_x.push_back(unit);
  for (const ExponentVector& g : gens)
    if (g[pivot] == 0) plus_x.push_back(g);

  std::vector<ExponentVector> colon_x;  // M : x
  for (const ExponentVector& g : gens) {
    ExponentVector h = g;
    if (h[pivot] > 0) --h[pivot];
    colon_x.push_back(std::move(h));
  }

  return uni_add(hilbert_numerator(std::move(plus_x), nvars),
                 uni_shift(hilbert_numerator(std::move(colon_x), nvars), 1));
}

inline long long binomial_coeff(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Hilbert series data of S/in(I): raw numerator over (1-t)^nvars and the
/// reduced form Q(t)/(1-t)^dimension with Q(1) != 0.
struct HilbertSeries {
  int nvars = 0;
  UniPoly numerator;
  UniPoly reduced;
  int dimension = 0;

  long long value(int d) const {
    if (d < 0) return 0;
    if (dimension == 0) return d < static_cast<int>(reduced.size()) ? reduced[d] : 0;
    long long acc = 0;
    for (std::size_t j = 0; j < reduced.size(); ++j)
      if (static_cast<int>(j) <= d)
        acc += reduced[j] * detail::binomial_coeff(d - static_cast<long long>(j) + dimension - 1,
                                                   dimension - 1);
    return acc;
  }
};

inline HilbertSeries hilbert_series(const GroebnerBasis& gb) {
  for (const Polynomial& p : gb.basis)
    if (!p.homogeneous()) throw NotHomogeneous("basis element is not homogeneous");
  std::vector<ExponentVector> lts;
  lts.reserve(gb.basis.size());
  for (const Polynomial& p : gb.basis) lts.push_back(p.leading_term(gb.order).first);
  HilbertSeries hs;
  hs.nvars = gb.nvars;
  hs.numerator = detail::hilbert_numerator(std::move(lts), gb.nvars);
  hs.reduced = hs.numerator;
  hs.dimension = gb.nvars;
  for (;;) {
    if (hs.reduced.empty()) {  // unit ideal: zero ring
      hs.dimension = 0;
      break;
    }
    long long at_one = 0;
    for (long long c : hs.reduced) at_one += c;
    if (at_one != 0 || hs.dimension == 0) break;
    // synthetic division by (1 - t)
    UniPoly q(hs.reduced.size() - 1, 0);
    long long carry = 0;
    for (std::size_t i = 0; i + 1 < hs.reduced.size(); ++i) {
      carry += hs.reduced[i];
      q[i] = carry;
    }
    hs.reduced = detail::uni_trim(std::move(q));
    --hs.dimension;
  }
  return hs;
}

inline long long hilbert_function(const GroebnerBasis& gb, int d) {
  return hilbert_series(gb).value(d);
}

/// Per-degree Hilbert values with stabilization data. For quotients of
/// dimension 0 or 1 the function is eventually constant (at 0 and at the
/// multiplicity respectively); `regularity` is the first degree from
/// which that holds. Higher-dimensional quotients get values only.
struct HilbertProfile {
  std::vector<long long> values;
  std::optional<long long> stable_value;
  std::optional<int> regularity;
  std::optional<long long> multiplicity;
  int dimension = 0;
};

inline HilbertProfile hilbert_profile(const GroebnerBasis& gb, int through_degree = -1) {
  const HilbertSeries hs = hilbert_series(gb);
  HilbertProfile prof;
  prof.dimension = hs.dimension;
  int horizon = through_degree;
  if (hs.dimension == 1) {
    const int reg = static_cast<int>(hs.reduced.size()) - 1;
    long long stable = 0;
    for (long long c : hs.reduced) stable += c;
    prof.regularity = reg;
    prof.stable_value = stable;
    prof.multiplicity = stable;
    horizon = std::max(horizon, reg);
  } else if (hs.dimension == 0) {
    const int reg = static_cast<int>(hs.reduced.size());  // first degree with value 0
    prof.regularity = reg;
    prof.stable_value = 0;
    prof.multiplicity = 0;
    horizon = std::max(horizon, reg);
  } else if (horizon < 0) {
    horizon = static_cast<int>(hs.numerator.size()) + 1;
  }
  for (int d = 0; d <= horizon; ++d) prof.values.push_back(hs.value(d));
  return prof;
}

}  // namespace mvi

#endif
