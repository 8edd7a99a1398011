#ifndef MVI_FINITE_FIELD_HPP
#define MVI_FINITE_FIELD_HPP

#include <cstdint>
#include <numeric>
#include <vector>

#include "mvi/errors.hpp"

namespace mvi {

/// Description of GF(q) with q = p^k. For k > 1, `modulus` holds the
/// coefficients c_0..c_k of the monic irreducible used for reduction.
struct FieldSpec {
  int q = 0;
  int p = 0;
  int k = 0;
  std::vector<int> modulus;  // empty when k == 1
};

/// An element of GF(q), identified by its canonical index in 0..q-1.
/// For extension fields the index is the base-p encoding of the
/// coefficient vector, so 0 and 1 are the additive and multiplicative
/// identities in every field.
struct FieldElement {
  std::uint16_t value = 0;
  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

namespace detail {

// polynomial helpers over GF(p), coefficient vectors low degree first

inline std::vector<int> poly_trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<int> poly_mul_mod_p(const std::vector<int>& a, const std::vector<int>& b, int p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return poly_trim(std::move(c));
}

// remainder of a modulo monic m
inline std::vector<int> poly_rem_mod_p(std::vector<int> a, const std::vector<int>& m, int p) {
  a = poly_trim(std::move(a));
  const int dm = static_cast<int>(m.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dm) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int c = a.back();
    for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
    a = poly_trim(std::move(a));
  }
  return a;
}

inline bool poly_is_zero(const std::vector<int>& a) { return poly_trim(a).empty(); }

// trial division by every monic polynomial of degree 1..deg/2
inline bool poly_irreducible_mod_p(const std::vector<int>& m, int p) {
  const int deg = static_cast<int>(m.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> div(d + 1, 0);
      long long c = code;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<int>(c % p);
        c /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_rem_mod_p(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace detail

/// Full-table arithmetic for GF(q), q <= 4096. Immutable after
/// construction; all queries are pure, so instances can be shared
/// freely across threads.
class FieldTable {
 public:
  static constexpr int kMaxOrder = 4096;

  explicit FieldTable(int q) {
    if (q > kMaxOrder) throw TooLarge("field order " + std::to_string(q) + " exceeds 4096");
    if (q < 2) throw NotPrimePower("field order must be at least 2");
    int p = smallest_prime_factor(q);
    int k = 0;
    int m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
    spec_.q = q;
    spec_.p = p;
    spec_.k = k;
    if (k > 1) spec_.modulus = find_modulus(p, k);
    build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  int order() const { return spec_.q; }
  int characteristic() const { return spec_.p; }
  int extension_degree() const { return spec_.k; }

  /// q = 2 makes the torus trivial (K* = {1}); callers that need a
  /// nontrivial unit group should check this.
  bool degenerate() const { return spec_.q == 2; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement element(int v) const {
    if (v < 0 || v >= spec_.q) throw Error("field element index out of range");
    return {static_cast<std::uint16_t>(v)};
  }

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[idx(a, b)]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[idx(a, b)]}; }
  FieldElement neg(FieldElement a) const { return {neg_[a.value]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

  FieldElement inv(FieldElement a) const {
    if (a.value == 0) throw Error("inverse of zero");
    return {inv_[a.value]};
  }

  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  FieldElement pow(FieldElement a, long long e) const {
    if (a.value == 0) {
      if (e == 0) return one();
      if (e < 0) throw Error("inverse of zero");
      return zero();
    }
    const int g = spec_.q - 1;
    long long r = (static_cast<long long>(log_[a.value]) * (e % g)) % g;
    if (r < 0) r += g;
    return {exp_[static_cast<std::size_t>(r)]};
  }

  /// Canonical generator of K^*: the smallest index of multiplicative
  /// order exactly q-1. Exists for every finite field; 1 for q = 2.
  FieldElement primitive() const { return {primitive_}; }

  /// Discrete log base primitive(); defined for nonzero elements.
  int dlog(FieldElement a) const {
    if (a.value == 0) throw Error("log of zero");
    return log_[a.value];
  }

 private:
  static int smallest_prime_factor(int n) {
    for (int d = 2; d * d <= n; ++d)
      if (n % d == 0) return d;
    return n;
  }

  // smallest monic irreducible of degree k: scan the base-p encodings of
  // the k low coefficients in increasing order
  static std::vector<int> find_modulus(int p, int k) {
    long long count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      std::vector<int> m(k + 1, 0);
      long long c = code;
      for (int i = 0; i < k; ++i) {
        m[i] = static_cast<int>(c % p);
        c /= p;
      }
      m[k] = 1;
      if (detail::poly_irreducible_mod_p(m, p)) return m;
    }
    throw Error("no irreducible modulus found");  // unreachable
  }

  std::size_t idx(FieldElement a, FieldElement b) const {
    return static_cast<std::size_t>(a.value) * spec_.q + b.value;
  }

  std::vector<int> digits(int v) const {
    std::vector<int> d(spec_.k, 0);
    for (int i = 0; i < spec_.k; ++i) {
      d[i] = v % spec_.p;
      v /= spec_.p;
    }
    return d;
  }

  int undigits(const std::vector<int>& d) const {
    int v = 0;
    for (int i = spec_.k - 1; i >= 0; --i) v = v * spec_.p + (i < static_cast<int>(d.size()) ? d[i] : 0);
    return v;
  }

  // schoolbook product of two canonical indices, used only to bootstrap
  // the exp/log tables
  int raw_mul(int a, int b) const {
    std::vector<int> prod =
        detail::poly_mul_mod_p(detail::poly_trim(digits(a)), detail::poly_trim(digits(b)), spec_.p);
    if (spec_.k > 1) prod = detail::poly_rem_mod_p(std::move(prod), spec_.modulus, spec_.p);
    return undigits(prod);
  }

  void build_tables() {
    const int q = spec_.q;
    const int p = spec_.p;
    const int g = q - 1;

    // primitive element: smallest index of multiplicative order q-1
    primitive_ = 1;
    for (int a = 1; a < q; ++a) {
      int ord = 1;
      int x = a;
      while (x != 1) {
        x = raw_mul(x, a);
        ++ord;
      }
      if (ord == g) {
        primitive_ = static_cast<std::uint16_t>(a);
        break;
      }
    }
    exp_.assign(g, 1);
    log_.assign(q, 0);
    int x = 1;
    for (int e = 0; e < g; ++e) {
      exp_[e] = static_cast<std::uint16_t>(x);
      log_[x] = e;
      x = raw_mul(x, primitive_);
    }

    std::vector<std::vector<int>> dig(q);
    for (int a = 0; a < q; ++a) dig[a] = digits(a);

    add_.assign(static_cast<std::size_t>(q) * q, 0);
    mul_.assign(static_cast<std::size_t>(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);
    std::vector<int> sum(spec_.k);
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        for (int i = 0; i < spec_.k; ++i) sum[i] = (dig[a][i] + dig[b][i]) % p;
        add_[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(undigits(sum));
        mul_[static_cast<std::size_t>(a) * q + b] =
            (a == 0 || b == 0) ? 0 : exp_[(log_[a] + log_[b]) % g];
      }
      for (int i = 0; i < spec_.k; ++i) sum[i] = (p - dig[a][i]) % p;
      neg_[a] = static_cast<std::uint16_t>(undigits(sum));
      if (a != 0) inv_[a] = exp_[(g - log_[a]) % g];
    }
  }

  FieldSpec spec_;
  std::vector<std::uint16_t> add_, mul_;
  std::vector<std::uint16_t> neg_, inv_;
  std::vector<std::uint16_t> exp_, log_;
  std::uint16_t primitive_ = 1;
};

inline FieldTable build_field(int q) { return FieldTable(q); }

inline FieldElement primitive_element(const FieldTable& f) { return f.primitive(); }

/// The q-1 invertible elements, in canonical index order.
inline std::vector<FieldElement> units(const FieldTable& f) {
  std::vector<FieldElement> u;
  u.reserve(f.order() - 1);
  for (int v = 1; v < f.order(); ++v) u.push_back(f.element(v));
  return u;
}

}  // namespace mvi

#endif
