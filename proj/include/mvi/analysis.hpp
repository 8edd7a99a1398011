#ifndef MVI_ANALYSIS_HPP
#define MVI_ANALYSIS_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvi/errors.hpp"
#include "mvi/finite_field.hpp"
#include "mvi/generators.hpp"
#include "mvi/graph.hpp"
#include "mvi/groebner.hpp"
#include "mvi/polyring.hpp"
#include "mvi/toric_set.hpp"

namespace mvi {

/// Caps that keep default runs interactive; every consumer takes these as
/// a parameter so the caller can raise them.
struct WorkBounds {
  long long max_points = 5000;       // |X|
  long long max_monomials = 200000;  // degree-d monomial count per rank
  long long max_codewords = 1000000; // q^dimension for minimum distance
};

enum class CheckStatus { Ok, Failed, Skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Ok: return "ok";
    case CheckStatus::Failed: return "failed";
    default: return "skipped";
  }
}

namespace detail {

inline long long monomial_count(int nvars, int degree) {
  // C(degree + nvars - 1, nvars - 1) with a soft overflow cap
  long long r = 1;
  for (int i = 1; i <= nvars - 1; ++i) {
    r = r * (degree + i) / i;
    if (r > (1LL << 50)) return 1LL << 50;
  }
  return r;
}

inline void enumerate_monomials(int nvars, int degree,
                                const std::function<void(const ExponentVector&)>& emit) {
  ExponentVector cur(nvars, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == nvars - 1) {
      cur[pos] = remaining;
      emit(cur);
      return;
    }
    for (int e = remaining; e >= 0; --e) {  // lexicographically decreasing tuples
      cur[pos] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, degree);
}

/// Incremental row echelon form over GF(q) with deterministic pivoting
/// (first nonzero column of the reduced row).
class RowEchelon {
 public:
  RowEchelon(const FieldTable& f, int width) : field_(&f), width_(width) {}

  bool insert(std::vector<FieldElement> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const FieldElement c = row[pivots_[k]];
      if (c == field_->zero()) continue;
      for (int j = 0; j < width_; ++j)
        row[j] = field_->sub(row[j], field_->mul(c, rows_[k][j]));
    }
    int pivot = -1;
    for (int j = 0; j < width_; ++j)
      if (row[j] != field_->zero()) {
        pivot = j;
        break;
      }
    if (pivot < 0) return false;
    const FieldElement scale = field_->inv(row[pivot]);
    for (int j = 0; j < width_; ++j) row[j] = field_->mul(row[j], scale);
    pivots_.push_back(pivot);
    rows_.push_back(std::move(row));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<FieldElement>>& rows() const { return rows_; }

 private:
  const FieldTable* field_;
  int width_;
  std::vector<std::vector<FieldElement>> rows_;
  std::vector<int> pivots_;
};

/// Echelon basis of the degree-d evaluation code of X.
inline RowEchelon evaluation_code(const ToricSet& X, int d, const WorkBounds& bounds) {
  const FieldTable& F = X.field();
  const int s = X.graph().s();
  if (X.size() > bounds.max_points) throw TooLarge("|X| exceeds the point bound");
  if (monomial_count(s, d) > bounds.max_monomials)
    throw TooLarge("degree-" + std::to_string(d) + " monomial count exceeds the bound");

  // power table: pow_tab[point][var][e] for e <= d
  const int npts = static_cast<int>(X.size());
  std::vector<std::vector<std::vector<FieldElement>>> pow_tab(npts);
  for (int p = 0; p < npts; ++p) {
    pow_tab[p].resize(s);
    for (int v = 0; v < s; ++v) {
      pow_tab[p][v].resize(d + 1);
      pow_tab[p][v][0] = F.one();
      for (int e = 1; e <= d; ++e)
        pow_tab[p][v][e] = F.mul(pow_tab[p][v][e - 1], X.points()[p].coords[v]);
    }
  }

  RowEchelon ech(F, npts);
  enumerate_monomials(s, d, [&](const ExponentVector& m) {
    if (ech.rank() == npts) return;  // rank cannot grow past |X|
    std::vector<FieldElement> row(npts);
    for (int p = 0; p < npts; ++p) {
      FieldElement acc = F.one();
      for (int v = 0; v < s; ++v)
        if (m[v] != 0) acc = F.mul(acc, pow_tab[p][v][m[v]]);
      row[p] = acc;
    }
    ech.insert(std::move(row));
  });
  return ech;
}

}  // namespace detail

/// H_{S/I(X)}(d) as the rank of the evaluation matrix of all degree-d
/// monomials at the points of X; independent of any Groebner data.
inline long long hilbert_oracle(const ToricSet& X, int d, const WorkBounds& bounds = {}) {
  if (d < 0) throw Error("degree must be nonnegative");
  return detail::evaluation_code(X, d, bounds).rank();
}

/// First degree whose evaluation rank reaches |X|; this is the index of
/// regularity because the Hilbert function increases strictly below it.
inline int regularity_oracle(const ToricSet& X, const WorkBounds& bounds = {}) {
  for (int d = 0;; ++d) {
    if (hilbert_oracle(X, d, bounds) == X.size()) return d;
  }
}

/// Closed-form regularity of S/I(X): the bipartite two-part formula, the
/// triangle special case 2(q-2), and max{alpha_i(q-2), ceil((n-1)(q-2)/2)}
/// for r >= 3, n >= 4.
inline int regularity_formula(const PartitionSpec& spec, int q) {
  std::vector<int> alphas = spec.alphas;
  if (alphas.size() < 2) throw InvalidPartition("need at least 2 parts");
  std::sort(alphas.begin(), alphas.end(), std::greater<>());
  const int r = static_cast<int>(alphas.size());
  const int n = std::accumulate(alphas.begin(), alphas.end(), 0);
  if (r == 2) return std::max((alphas[0] - 1) * (q - 2), (alphas[1] - 1) * (q - 2));
  if (n == 3) return 2 * (q - 2);
  const int half = ((n - 1) * (q - 2) + 1) / 2;
  return std::max(alphas[0] * (q - 2), half);
}

/// ceil( #X * (n-1)(q-2) / (2 (q-1)^{n-1}) ), the clutter lower bound
/// specialized to graphs (k = 2).
inline int grs_lower_bound(const PartitionSpec& spec, int q, long long card) {
  const int n = spec.n();
  const long long num = card * (n - 1) * (q - 2);
  if (num <= 0) return 0;
  long long den = 2;
  for (int i = 0; i < n - 1; ++i) {
    den *= q - 1;
    if (den >= num) return 1;  // more factors only shrink the ratio
  }
  return static_cast<int>((num + den - 1) / den);
}

struct HilbertMatchRow {
  int degree;
  long long hf_ideal;   // S/J via Groebner + Hilbert series
  long long hf_oracle;  // evaluation rank on X
};

struct VerificationReport {
  PartitionSpec partition;
  int q = 0;
  int s = 0;
  long long expected_card = 0;
  std::optional<long long> cardinality;

  std::size_t count_type_i = 0, count_type_ii = 0, count_type_iii = 0;

  CheckStatus cardinality_ok = CheckStatus::Skipped;
  CheckStatus containment_ok = CheckStatus::Skipped;
  CheckStatus hilbert_ok = CheckStatus::Skipped;
  CheckStatus stabilization_ok = CheckStatus::Skipped;
  CheckStatus regularity_ok = CheckStatus::Skipped;
  CheckStatus grs_ok = CheckStatus::Skipped;
  std::optional<CheckStatus> saturation_ok;

  std::vector<HilbertMatchRow> hilbert_match;
  int regularity_formula_value = 0;
  std::optional<int> regularity_oracle_value;
  std::optional<int> regularity_groebner_value;
  int grs_bound = 0;
  std::vector<std::string> notes;

  bool any(CheckStatus st) const {
    for (CheckStatus c : {cardinality_ok, containment_ok, hilbert_ok, stabilization_ok,
                          regularity_ok, grs_ok, saturation_ok.value_or(CheckStatus::Ok)})
      if (c == st) return true;
    return false;
  }
  bool all_ok() const { return !any(CheckStatus::Failed) && !any(CheckStatus::Skipped); }
  bool failed() const { return any(CheckStatus::Failed); }
};

struct VerifyOptions {
  bool with_saturation = false;
  WorkBounds bounds{};
};

/// Builds J from the three generator families and certifies J = I(X):
/// containment by evaluating every generator on X, degreewise Hilbert
/// agreement up to regularity + 2, and stabilization of H_{S/J} at |X|
/// via the dimension-1 Hilbert series. Also cross-checks the regularity
/// formula, the clutter lower bound and (optionally) the saturation
/// identity.
inline VerificationReport verify_generation(const PartitionSpec& spec, int q,
                                            const VerifyOptions& opts = {}) {
  const FieldTable field = build_field(q);
  const MultipartiteGraph g = build_graph(spec);

  VerificationReport rep;
  rep.partition = spec;
  rep.q = q;
  rep.s = g.s();
  rep.expected_card = expected_cardinality(g, q);
  rep.regularity_formula_value = regularity_formula(spec, q);
  rep.grs_bound = grs_lower_bound(spec, q, rep.expected_card);

  std::vector<Binomial> gens = type_i(g, q);
  rep.count_type_i = gens.size();
  for (Binomial& b : type_ii(g)) {
    gens.push_back(std::move(b));
    ++rep.count_type_ii;
  }
  for (Binomial& b : type_iii(g, q)) {
    gens.push_back(std::move(b));
    ++rep.count_type_iii;
  }

  // enumerate X unless the bounds say otherwise
  std::optional<ToricSet> X;
  if (rep.expected_card > opts.bounds.max_points) {
    rep.notes.push_back("point enumeration skipped: expected |X| exceeds bound");
  } else {
    try {
      X = enumerate_X(g, field);
    } catch (const TooLarge& e) {
      rep.notes.push_back(std::string("point enumeration skipped: ") + e.what());
    }
  }

  if (X) {
    rep.cardinality = X->size();
    rep.cardinality_ok = X->size() == rep.expected_card ? CheckStatus::Ok : CheckStatus::Failed;
  }

  // containment J <= I(X): pointwise on X when available, otherwise the
  // weighted-degree criterion (exact either way)
  {
    bool ok = true;
    for (const Binomial& b : gens) {
      const bool v = X ? vanishes_pointwise(b, *X) : vanishes_on_X(b, g, q);
      if (!v) {
        ok = false;
        break;
      }
    }
    rep.containment_ok = ok ? CheckStatus::Ok : CheckStatus::Failed;
    if (!X) rep.notes.push_back("containment checked by the vanishing criterion only");
  }

  const MonomialOrder ord = MonomialOrder::grevlex(g.s());
  const Ideal J = ideal_from_binomials(field, g.s(), gens);
  const GroebnerBasis gb = buchberger(J, ord);
  const HilbertSeries series = hilbert_series(gb);

  if (series.dimension == 1) {
    long long stable = 0;
    for (long long c : series.reduced) stable += c;
    rep.regularity_groebner_value = static_cast<int>(series.reduced.size()) - 1;
    rep.stabilization_ok = stable == rep.expected_card &&
                                   *rep.regularity_groebner_value <= rep.regularity_formula_value + 2
                               ? CheckStatus::Ok
                               : CheckStatus::Failed;
  } else {
    rep.stabilization_ok = CheckStatus::Failed;
    rep.notes.push_back("S/J has dimension " + std::to_string(series.dimension) + ", expected 1");
  }

  const int horizon = rep.regularity_formula_value + 2;
  if (X) {
    bool all_match = true;
    bool skipped = false;
    for (int d = 0; d <= horizon; ++d) {
      const long long hf_j = series.value(d);
      long long hf_x = -1;
      try {
        hf_x = hilbert_oracle(*X, d, opts.bounds);
      } catch (const TooLarge& e) {
        rep.notes.push_back("oracle rank at degree " + std::to_string(d) +
                            " skipped: " + e.what());
        skipped = true;
        break;
      }
      rep.hilbert_match.push_back({d, hf_j, hf_x});
      if (hf_j != hf_x) all_match = false;
      if (!rep.regularity_oracle_value && hf_x == X->size()) rep.regularity_oracle_value = d;
    }
    rep.hilbert_ok =
        skipped ? CheckStatus::Skipped : (all_match ? CheckStatus::Ok : CheckStatus::Failed);
  }

  // three-way regularity agreement
  if (rep.regularity_oracle_value && rep.regularity_groebner_value) {
    rep.regularity_ok = (*rep.regularity_oracle_value == rep.regularity_formula_value &&
                         *rep.regularity_groebner_value == rep.regularity_formula_value)
                            ? CheckStatus::Ok
                            : CheckStatus::Failed;
  } else if (rep.regularity_groebner_value) {
    rep.regularity_ok = *rep.regularity_groebner_value == rep.regularity_formula_value
                            ? CheckStatus::Skipped  // oracle leg missing
                            : CheckStatus::Failed;
  }

  if (rep.regularity_oracle_value)
    rep.grs_ok =
        *rep.regularity_oracle_value >= rep.grs_bound ? CheckStatus::Ok : CheckStatus::Failed;

  if (opts.with_saturation) {
    Ideal base = toric_ideal_PG(g, field);
    for (const Binomial& b : type_i(g, q))
      base.gens.push_back(Polynomial::from_binomial(field, b));
    std::vector<int> all_vars(g.s());
    for (int i = 0; i < g.s(); ++i) all_vars[i] = i + 1;
    const Ideal sat = saturate(base, all_vars);
    rep.saturation_ok = ideal_equal(sat, J, ord) ? CheckStatus::Ok : CheckStatus::Failed;
  }

  return rep;
}

struct WitnessReport {
  PartitionSpec partition;
  int q = 0;
  ExponentVector witness;
  int witness_degree = 0;
  int regularity = 0;  // formula value, = witness degree when alpha_1(q-2) wins
  bool witness_survives = false;     // nonzero normal form mod I(X)+(t_1)
  long long hf_artinian_at_reg = 0;  // must stay positive
  long long hf_artinian_above = 0;   // must vanish
  std::optional<int> regularity_oracle_value;
  CheckStatus artinian_consistency = CheckStatus::Skipped;

  bool ok() const {
    return witness_survives && hf_artinian_above == 0 && hf_artinian_at_reg > 0 &&
           artinian_consistency != CheckStatus::Failed;
  }
};

/// The Artinian-reduction argument, run exactly: the witness monomial has
/// nonzero normal form modulo I(X)+(t_1) under the t_1-least order, and
/// every monomial one degree above the regularity reduces to zero.
inline WitnessReport verify_regularity_witness(const PartitionSpec& spec, int q,
                                               const WorkBounds& bounds = {}) {
  const FieldTable field = build_field(q);
  const MultipartiteGraph g = build_graph(spec);

  WitnessReport rep;
  rep.partition = spec;
  rep.q = q;
  rep.witness = witness_monomial(g, q);  // throws Unsupported for out-of-scope shapes
  rep.witness_degree = total_degree(rep.witness);
  rep.regularity = regularity_formula(spec, q);

  std::vector<Binomial> gens = type_i(g, q);
  for (Binomial& b : type_ii(g)) gens.push_back(std::move(b));
  for (Binomial& b : type_iii(g, q)) gens.push_back(std::move(b));
  Ideal I = ideal_from_binomials(field, g.s(), gens);
  ExponentVector t1(g.s(), 0);
  t1[0] = 1;
  I.gens.push_back(Polynomial::monomial(field, t1, field.one()));

  const MonomialOrder ord = MonomialOrder::grevlex(g.s());  // t_1 least
  const GroebnerBasis gb = buchberger(I, ord);

  rep.witness_survives =
      !normal_form(Polynomial::monomial(field, rep.witness, field.one()), gb).is_zero();

  const HilbertSeries series = hilbert_series(gb);
  rep.hf_artinian_at_reg = series.value(rep.regularity);
  rep.hf_artinian_above = series.value(rep.regularity + 1);

  // reg S/I(X) = reg S/(I(X)+(t_1)) - 1: compare the Artinian profile
  // against the evaluation oracle when X is within bounds
  if (expected_cardinality(g, q) <= bounds.max_points) {
    const ToricSet X = enumerate_X(g, field);
    rep.regularity_oracle_value = regularity_oracle(X, bounds);
    const int artinian_reg =
        series.dimension == 0 ? static_cast<int>(series.reduced.size()) : -1;
    rep.artinian_consistency = artinian_reg == *rep.regularity_oracle_value + 1
                                   ? CheckStatus::Ok
                                   : CheckStatus::Failed;
  }
  return rep;
}

/// Length, dimension and (optionally) exact minimum distance of the
/// degree-d evaluation code on X.
struct CodeParams {
  long long length = 0;
  long long dimension = 0;
  int degree = 0;
  std::optional<long long> min_distance;
};

inline CodeParams code_params(const PartitionSpec& spec, int q, int degree,
                              bool want_min_distance, const WorkBounds& bounds = {}) {
  const FieldTable field = build_field(q);
  const MultipartiteGraph g = build_graph(spec);
  const ToricSet X = enumerate_X(g, field);
  if (X.size() > bounds.max_points) throw TooLarge("|X| exceeds the point bound");

  const detail::RowEchelon code = detail::evaluation_code(X, degree, bounds);
  CodeParams out;
  out.length = X.size();
  out.dimension = code.rank();
  out.degree = degree;

  if (want_min_distance) {
    double count = 1;
    for (long long i = 0; i < out.dimension; ++i) {
      count *= q;
      if (count > static_cast<double>(bounds.max_codewords))
        throw TooLarge("q^dimension exceeds the codeword bound");
    }
    const int npts = static_cast<int>(X.size());
    long long best = npts + 1;
    std::vector<FieldElement> word(npts, field.zero());
    auto rec = [&](auto&& self, std::size_t i, bool any) -> void {
      if (i == code.rows().size()) {
        if (!any) return;
        long long w = 0;
        for (const FieldElement& c : word)
          if (c != field.zero()) ++w;
        best = std::min(best, w);
        return;
      }
      self(self, i + 1, any);  // coefficient 0
      std::vector<FieldElement> saved = word;
      for (int c = 1; c < q; ++c) {
        for (int j = 0; j < npts; ++j)
          word[j] = field.add(saved[j], field.mul(field.element(c), code.rows()[i][j]));
        self(self, i + 1, true);
      }
      word = std::move(saved);
    };
    rec(rec, 0, false);
    if (best <= npts) out.min_distance = best;
  }
  return out;
}

}  // namespace mvi

#endif
