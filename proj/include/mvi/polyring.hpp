#ifndef MVI_POLYRING_HPP
#define MVI_POLYRING_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "mvi/errors.hpp"
#include "mvi/finite_field.hpp"
#include "mvi/graph.hpp"

namespace mvi {

/// Exponent vector of a monomial t_1^{a_1}...t_s^{a_s}; entry i-1 is the
/// exponent of t_i.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& a) { return std::accumulate(a.begin(), a.end(), 0); }

inline ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) throw Error("exponent subtraction went negative");
  }
  return c;
}

inline bool exp_divides(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

inline ExponentVector exp_gcd(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  ExponentVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::min(a[i], b[i]);
  return c;
}

inline bool exp_coprime(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("exponent vector lengths differ");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

/// 1-based variable indices with nonzero exponent.
inline std::vector<int> support(const ExponentVector& a) {
  std::vector<int> s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

/// t^plus - t^minus with disjoint supports.
struct Binomial {
  ExponentVector plus, minus;

  Binomial(ExponentVector p, ExponentVector m) : plus(std::move(p)), minus(std::move(m)) {
    if (plus.size() != minus.size()) throw LengthMismatch("binomial sides have different lengths");
    if (!exp_coprime(plus, minus)) throw Error("binomial sides must have disjoint supports");
  }

  int num_vars() const { return static_cast<int>(plus.size()); }
  int degree() const { return std::max(total_degree(plus), total_degree(minus)); }
  bool homogeneous() const { return total_degree(plus) == total_degree(minus); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// t^a - t^b with the common monomial factor cancelled.
inline Binomial difference_binomial(const ExponentVector& a, const ExponentVector& b) {
  const ExponentVector g = exp_gcd(a, b);
  return Binomial(exp_sub(a, g), exp_sub(b, g));
}

/// Weighted subgraph of a monomial: edges are the variables dividing it,
/// weighted by exponents; vertex weight is the sum over incident edges.
struct WeightedSubgraph {
  std::map<int, int> edge_weights;  // 1-based edge index -> weight
  std::vector<int> vertex_weights;  // size n
};

inline WeightedSubgraph weighted_subgraph(const ExponentVector& m, const MultipartiteGraph& g) {
  if (static_cast<int>(m.size()) != g.s())
    throw LengthMismatch("exponent vector length differs from edge count");
  WeightedSubgraph h;
  h.vertex_weights.assign(g.n(), 0);
  for (int i = 1; i <= g.s(); ++i) {
    const int w = m[i - 1];
    if (w == 0) continue;
    h.edge_weights[i] = w;
    h.vertex_weights[g.edge(i).u] += w;
    h.vertex_weights[g.edge(i).v] += w;
  }
  return h;
}

/// Vanishing criterion for binomials: t^a - t^b vanishes on X iff the
/// weighted degrees of the two sides agree mod q-1 at every vertex.
/// Works for inhomogeneous binomials too.
inline bool vanishes_on_X(const Binomial& f, const MultipartiteGraph& g, int q) {
  const WeightedSubgraph ha = weighted_subgraph(f.plus, g);
  const WeightedSubgraph hb = weighted_subgraph(f.minus, g);
  const int m = q - 1;
  for (Vertex v = 0; v < g.n(); ++v)
    if ((ha.vertex_weights[v] - hb.vertex_weights[v]) % m != 0) return false;
  return true;
}

enum class OrderKind { Grlex, Grevlex };

/// Degree-refining monomial order. `priority` lists variables (1-based)
/// from greatest to least; the default grevlex order has t_s > ... > t_1,
/// making t_1 the least variable. A nonempty `elim_vars` block turns this
/// into the product order comparing the block degree first (used for
/// elimination; not degree-refining overall).
struct MonomialOrder {
  OrderKind kind = OrderKind::Grevlex;
  std::vector<int> priority;
  std::vector<int> elim_vars;

  static MonomialOrder grevlex(int nvars) { return {OrderKind::Grevlex, default_priority(nvars), {}}; }
  static MonomialOrder grlex(int nvars) { return {OrderKind::Grlex, default_priority(nvars), {}}; }

  static std::vector<int> default_priority(int nvars) {
    std::vector<int> p(nvars);
    for (int i = 0; i < nvars; ++i) p[i] = nvars - i;
    return p;
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

/// -1, 0, +1 as m1 <, =, > m2.
inline int compare(const MonomialOrder& ord, const ExponentVector& m1, const ExponentVector& m2) {
  if (m1.size() != m2.size()) throw LengthMismatch("exponent vector lengths differ");
  if (!ord.elim_vars.empty()) {
    int d1 = 0, d2 = 0;
    for (int v : ord.elim_vars) {
      d1 += m1[v - 1];
      d2 += m2[v - 1];
    }
    if (d1 != d2) return d1 < d2 ? -1 : 1;
  }
  const int deg1 = total_degree(m1), deg2 = total_degree(m2);
  if (deg1 != deg2) return deg1 < deg2 ? -1 : 1;
  const int s = static_cast<int>(m1.size());
  if (ord.kind == OrderKind::Grlex) {
    for (int k = 0; k < s; ++k) {
      const int v = ord.priority[k];
      if (m1[v - 1] != m2[v - 1]) return m1[v - 1] < m2[v - 1] ? -1 : 1;
    }
  } else {
    for (int k = s - 1; k >= 0; --k) {
      const int v = ord.priority[k];
      if (m1[v - 1] != m2[v - 1]) return m1[v - 1] < m2[v - 1] ? 1 : -1;
    }
  }
  return 0;
}

/// Sparse polynomial over GF(q) in a fixed number of variables. Terms are
/// stored in a canonical map keyed by exponent vector, so equality and
/// serialization are order-independent.
class Polynomial {
 public:
  using TermMap = std::map<ExponentVector, FieldElement>;

  Polynomial(const FieldTable& field, int nvars) : field_(&field), nvars_(nvars) {}

  static Polynomial monomial(const FieldTable& field, ExponentVector e, FieldElement c) {
    Polynomial p(field, static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
  }

  static Polynomial from_binomial(const FieldTable& field, const Binomial& b) {
    Polynomial p(field, b.num_vars());
    p.add_term(b.plus, field.one());
    p.add_term(b.minus, field.neg(field.one()));
    return p;
  }

  const FieldTable& field() const { return *field_; }
  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Adds c*t^e, merging with an existing term and dropping zeros.
  void add_term(const ExponentVector& e, FieldElement c) {
    if (static_cast<int>(e.size()) != nvars_) throw LengthMismatch("term has wrong variable count");
    if (c == field_->zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = field_->add(it->second, c);
      if (it->second == field_->zero()) terms_.erase(it);
    }
  }

  Polynomial operator+(const Polynomial& other) const {
    check_compatible(other);
    Polynomial r = *this;
    for (const auto& [e, c] : other.terms_) r.add_term(e, c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(*field_, nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, field_->neg(c));
    return r;
  }

  Polynomial operator-(const Polynomial& other) const { return *this + (-other); }

  Polynomial scaled(FieldElement c) const {
    Polynomial r(*field_, nvars_);
    if (c == field_->zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, field_->mul(k, c));
    return r;
  }

  /// Multiplication by the term c*t^e.
  Polynomial times_term(const ExponentVector& e, FieldElement c) const {
    if (static_cast<int>(e.size()) != nvars_) throw LengthMismatch("term has wrong variable count");
    Polynomial r(*field_, nvars_);
    if (c == field_->zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(exp_add(m, e), field_->mul(k, c));
    return r;
  }

  Polynomial operator*(const Polynomial& other) const {
    check_compatible(other);
    Polynomial r(*field_, nvars_);
    for (const auto& [e, c] : other.terms_) {
      for (const auto& [m, k] : terms_) r.add_term(exp_add(m, e), field_->mul(k, c));
    }
    return r;
  }

  std::pair<ExponentVector, FieldElement> leading_term(const MonomialOrder& ord) const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (compare(ord, it->first, best->first) > 0) best = it;
    return {best->first, best->second};
  }

  int degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
  }

  bool homogeneous() const {
    if (terms_.empty()) return true;
    const int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != d) return false;
    return true;
  }

  bool operator==(const Polynomial& other) const {
    return field_->order() == other.field_->order() && nvars_ == other.nvars_ &&
           terms_ == other.terms_;
  }

 private:
  void check_compatible(const Polynomial& other) const {
    if (field_->order() != other.field_->order())
      throw FieldMismatch("polynomials over different fields");
    if (nvars_ != other.nvars_) throw LengthMismatch("polynomials with different variable counts");
  }

  const FieldTable* field_;
  int nvars_;
  TermMap terms_;
};

}  // namespace mvi

#endif
