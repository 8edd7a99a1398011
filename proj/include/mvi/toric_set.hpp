#ifndef MVI_TORIC_SET_HPP
#define MVI_TORIC_SET_HPP

#include <cstdint>
#include <set>
#include <vector>

#include "mvi/errors.hpp"
#include "mvi/finite_field.hpp"
#include "mvi/graph.hpp"
#include "mvi/polyring.hpp"

namespace mvi {

/// Point of P^{s-1} with all coordinates in K^*, scaled so the first
/// coordinate is 1.
struct ProjectivePoint {
  std::vector<FieldElement> coords;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

/// The algebraic toric set X: images of (x^{e_1},...,x^{e_s}) for
/// x in (K^*)^n, deduplicated and sorted by coordinate tuple. Keeps both
/// the normalized projective points and the affine image of the
/// parameterization; the latter is what vanishing of an inhomogeneous
/// binomial refers to, since scaling does not cancel between sides of
/// different degrees.
class ToricSet {
 public:
  ToricSet(const MultipartiteGraph& g, const FieldTable& f, std::vector<ProjectivePoint> pts,
           std::vector<std::vector<FieldElement>> affine)
      : graph_(&g), field_(&f), points_(std::move(pts)), affine_(std::move(affine)) {}

  const MultipartiteGraph& graph() const { return *graph_; }
  const FieldTable& field() const { return *field_; }
  const std::vector<ProjectivePoint>& points() const { return points_; }
  const std::vector<std::vector<FieldElement>>& affine_points() const { return affine_; }
  long long size() const { return static_cast<long long>(points_.size()); }

 private:
  const MultipartiteGraph* graph_;
  const FieldTable* field_;
  std::vector<ProjectivePoint> points_;
  std::vector<std::vector<FieldElement>> affine_;
};

/// Multiplicity of S/I(X) for a connected complete multipartite graph:
/// (q-1)^{n-1} when some triangle exists (r >= 3), (q-1)^{n-2} in the
/// bipartite case.
inline long long expected_cardinality(const MultipartiteGraph& g, int q) {
  const int exponent = g.is_bipartite() ? g.n() - 2 : g.n() - 1;
  long long card = 1;
  for (int i = 0; i < exponent; ++i) card *= q - 1;
  return card;
}

inline ToricSet enumerate_X(const MultipartiteGraph& g, const FieldTable& field) {
  const int n = g.n();
  const int s = g.s();
  const int q = field.order();
  double budget = 1;
  for (int i = 0; i < n; ++i) {
    budget *= q - 1;
    if (budget > 1e7) throw TooLarge("(q-1)^n exceeds the enumeration guard");
  }

  std::set<std::vector<std::uint16_t>> seen, seen_affine;
  std::vector<int> x(n, 1);  // unit indices 1..q-1
  std::vector<std::uint16_t> row(s);
  for (;;) {
    for (int i = 1; i <= s; ++i) {
      const Edge& e = g.edge(i);
      row[i - 1] =
          field.mul(field.element(x[e.u]), field.element(x[e.v])).value;
    }
    seen_affine.insert(row);
    const FieldElement scale = field.inv(FieldElement{row[0]});
    for (int i = 0; i < s; ++i) row[i] = field.mul(FieldElement{row[i]}, scale).value;
    seen.insert(row);

    int pos = n - 1;
    while (pos >= 0 && x[pos] == q - 1) {
      x[pos] = 1;
      --pos;
    }
    if (pos < 0) break;
    ++x[pos];
  }

  std::vector<ProjectivePoint> pts;
  pts.reserve(seen.size());
  for (const auto& r : seen) {
    ProjectivePoint p;
    p.coords.reserve(s);
    for (std::uint16_t v : r) p.coords.push_back(FieldElement{v});
    pts.push_back(std::move(p));
  }
  std::vector<std::vector<FieldElement>> affine;
  affine.reserve(seen_affine.size());
  for (const auto& r : seen_affine) {
    std::vector<FieldElement> p;
    p.reserve(s);
    for (std::uint16_t v : r) p.push_back(FieldElement{v});
    affine.push_back(std::move(p));
  }
  return ToricSet(g, field, std::move(pts), std::move(affine));
}

/// Value of the monomial t^m at p; always a unit.
inline FieldElement evaluate(const ExponentVector& m, const ProjectivePoint& p,
                             const FieldTable& field) {
  if (m.size() != p.coords.size()) throw LengthMismatch("monomial/point length mismatch");
  FieldElement acc = field.one();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) acc = field.mul(acc, field.pow(p.coords[i], m[i]));
  return acc;
}

inline FieldElement evaluate_coords(const ExponentVector& m, const std::vector<FieldElement>& c,
                                    const FieldTable& field) {
  if (m.size() != c.size()) throw LengthMismatch("monomial/point length mismatch");
  FieldElement acc = field.one();
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) acc = field.mul(acc, field.pow(c[i], m[i]));
  return acc;
}

/// Pointwise vanishing of a binomial over X; the brute-force counterpart
/// of vanishes_on_X. Runs over the parameterized affine points so that
/// inhomogeneous binomials are treated the same way the vanishing
/// criterion treats them.
inline bool vanishes_pointwise(const Binomial& f, const ToricSet& X) {
  for (const auto& p : X.affine_points())
    if (evaluate_coords(f.plus, p, X.field()) != evaluate_coords(f.minus, p, X.field()))
      return false;
  return true;
}

}  // namespace mvi

#endif
