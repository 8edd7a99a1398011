#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mvi/generators.hpp"
#include "mvi/groebner.hpp"
#include "mvi/toric_set.hpp"

using namespace mvi;

namespace {

ExponentVector ev(std::initializer_list<int> xs) { return ExponentVector(xs); }

ExponentVector monomial_on_edges(const MultipartiteGraph& g,
                                 std::initializer_list<std::pair<std::pair<int, int>, int>> terms) {
  ExponentVector m(g.s(), 0);
  for (const auto& [edge, w] : terms) m[g.edge_index(edge.first, edge.second) - 1] += w;
  return m;
}

}  // namespace

TEST_CASE("type I star family") {
  MultipartiteGraph g = build_graph({{1, 1, 1}});
  auto fam = type_i(g, 3);
  REQUIRE(fam.size() == 2);  // s - 1
  CHECK(fam[0] == Binomial(ev({0, 2, 0}), ev({2, 0, 0})));
  CHECK(fam[1] == Binomial(ev({0, 0, 2}), ev({2, 0, 0})));
  for (const Binomial& b : fam) {
    CHECK(b.homogeneous());
    CHECK(vanishes_on_X(b, g, 3));
  }
}

TEST_CASE("pairwise type I family") {
  MultipartiteGraph g = build_graph({{2, 2}});
  auto fam = type_i_pairwise(g, 4);
  CHECK(fam.size() == 4 * 3 / 2);
  for (const Binomial& b : fam) CHECK(vanishes_on_X(b, g, 4));

  // same ideal as the star family
  FieldTable f = build_field(4);
  CHECK(ideal_equal(ideal_from_binomials(f, g.s(), fam),
                    ideal_from_binomials(f, g.s(), type_i(g, 4)),
                    MonomialOrder::grevlex(g.s())));
}

TEST_CASE("type II quadrics") {
  CHECK(type_ii(build_graph({{1, 1, 1}})).empty());

  MultipartiteGraph k22 = build_graph({{2, 2}});
  auto fam = type_ii(k22);
  REQUIRE(fam.size() == 1);
  CHECK(fam[0] == Binomial(monomial_on_edges(k22, {{{0, 2}, 1}, {{1, 3}, 1}}),
                           monomial_on_edges(k22, {{{2, 1}, 1}, {{0, 3}, 1}})));

  for (const auto& alphas : std::vector<std::vector<int>>{{2, 2}, {1, 1, 2}, {2, 2, 1}}) {
    MultipartiteGraph g = build_graph({alphas});
    for (const Binomial& b : type_ii(g)) {
      CHECK(b.homogeneous());
      CHECK(b.degree() == 2);
      CHECK(vanishes_on_X(b, g, 5));
    }
  }
}

TEST_CASE("type III on K_{1,1,2} at q = 3") {
  MultipartiteGraph g = build_graph({{1, 1, 2}});
  auto fam = type_iii_with_configs(g, 3);
  REQUIRE(fam.size() == 2);

  const Binomial expected(monomial_on_edges(g, {{{2, 0}, 1}, {{2, 1}, 1}}),
                          monomial_on_edges(g, {{{3, 0}, 1}, {{3, 1}, 1}}));
  bool found = false;
  for (const auto& [cfg, b] : fam)
    if (b == expected) {
      found = true;
      CHECK(cfg.hub_a == 2);
      CHECK(cfg.hub_b == 3);
      CHECK(cfg.middle == std::vector<Vertex>{0, 1});
      CHECK(cfg.weights == std::vector<int>{1, 1});
    }
  CHECK(found);
}

TEST_CASE("type III family properties") {
  CHECK(type_iii(build_graph({{1, 1, 1}}), 3).empty());
  CHECK(type_iii(build_graph({{2, 2, 1}}), 2).empty());  // no valid weights at q = 2

  for (const auto& alphas : std::vector<std::vector<int>>{{1, 1, 2}, {2, 2}, {2, 2, 1}}) {
    MultipartiteGraph g = build_graph({alphas});
    for (int q : {3, 4, 5}) {
      std::set<std::pair<ExponentVector, ExponentVector>> seen;
      for (const auto& [cfg, b] : type_iii_with_configs(g, q)) {
        CHECK(b.homogeneous());
        CHECK(total_degree(b.plus) == q - 1);
        CHECK(vanishes_on_X(b, g, q));
        CHECK(cfg.hub_a < cfg.hub_b);
        CHECK(seen.insert({b.plus, b.minus}).second);  // no duplicates
        CHECK(seen.count({b.minus, b.plus}) == 0);     // no negated duplicates
        if (q == 3) {
          CHECK(cfg.middle.size() == 2);
          CHECK(cfg.weights == std::vector<int>{1, 1});
        }
      }
    }
  }
}

TEST_CASE("generalized type III validation and base case") {
  MultipartiteGraph g = build_graph({{1, 1, 2}});
  const int q = 3;
  TypeIIIConfig cfg{2, 3, {0, 1}, {1, 1}};
  const Binomial b = generalized_type_iii(cfg, g, q);
  auto fam = type_iii(g, q);
  CHECK(std::find(fam.begin(), fam.end(), b) != fam.end());

  CHECK_THROWS_AS(generalized_type_iii({2, 3, {0}, {2}}, g, q), InvalidConfig);
  CHECK_THROWS_AS(generalized_type_iii({2, 2, {0, 1}, {1, 1}}, g, q), InvalidConfig);
  CHECK_THROWS_AS(generalized_type_iii({2, 3, {0, 0}, {1, 1}}, g, q), InvalidConfig);
  CHECK_THROWS_AS(generalized_type_iii({2, 3, {0, 1}, {1, 2}}, g, q), InvalidConfig);  // d_k > q-2
  CHECK_THROWS_AS(generalized_type_iii({2, 3, {0, 1}, {1}}, g, q), InvalidConfig);
  CHECK_THROWS_AS(generalized_type_iii({0, 2, {1, 3}, {1, 1}}, g, q), InvalidConfig);  // {2,3} no edge
}

TEST_CASE("generalized type III reduces to zero modulo the type III ideal") {
  // K_{1,1,2,2} hosts alpha = 2 with four middles at q = 3
  MultipartiteGraph g = build_graph({{1, 1, 2, 2}});
  const int q = 3;
  FieldTable f = build_field(q);
  const MonomialOrder ord = MonomialOrder::grevlex(g.s());
  const GroebnerBasis gb = buchberger(ideal_from_binomials(f, g.s(), type_iii(g, q)), ord);

  TypeIIIConfig cfg{0, 1, {2, 3, 4, 5}, {1, 1, 1, 1}};  // sum = 4 = 2(q-1)
  const Binomial b = generalized_type_iii(cfg, g, q);
  CHECK(vanishes_on_X(b, g, q));
  CHECK(normal_form(Polynomial::from_binomial(f, b), gb).is_zero());
}

TEST_CASE("move_weight on the K_{1,1,2} example") {
  MultipartiteGraph g = build_graph({{1, 1, 2}});
  const int q = 3;
  const ExponentVector m = monomial_on_edges(g, {{{2, 0}, 1}, {{2, 1}, 1}});
  const std::vector<int> subset{g.edge_index(2, 0), g.edge_index(2, 1)};
  const ExponentVector out = move_weight(m, 2, subset, 3, 1, g, q);
  CHECK(out == monomial_on_edges(g, {{{3, 0}, 1}, {{3, 1}, 1}}));
  CHECK(vanishes_on_X(difference_binomial(m, out), g, q));
}

TEST_CASE("move_weight error paths") {
  MultipartiteGraph g = build_graph({{1, 1, 2}});
  const ExponentVector m = monomial_on_edges(g, {{{2, 0}, 1}, {{2, 1}, 1}});
  const std::vector<int> subset{g.edge_index(2, 0), g.edge_index(2, 1)};
  CHECK_THROWS_AS(move_weight(m, 2, subset, 3, 2, g, 3), InsufficientWeight);
  CHECK_THROWS_AS(move_weight(m, 2, {g.edge_index(2, 0)}, 3, 1, g, 3), TooFewEdges);
  CHECK_THROWS_AS(move_weight(m, 2, subset, 2, 1, g, 3), NotAdjacent);  // w0 == v0
  CHECK_THROWS_AS(move_weight(m, 2, subset, 1, 1, g, 3), NotAdjacent);  // {1, middle 1} missing
  CHECK_THROWS_AS(move_weight(m, 0, subset, 3, 1, g, 3), NotAdjacent);  // subset not at v0
}

TEST_CASE("move_weight bookkeeping on random valid inputs") {
  std::mt19937 rng(555001);
  for (int trial = 0; trial < 200; ++trial) {
    const int q = 3 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> shapes{{1, 1, 2}, {2, 2, 1}, {1, 2, 2}, {2, 3}, {1, 1, 1, 1}};
    MultipartiteGraph g = build_graph({shapes[rng() % shapes.size()]});

    // pick hubs with at least two common neighbors
    std::vector<std::pair<Vertex, Vertex>> hubs;
    for (Vertex a = 0; a < g.n(); ++a)
      for (Vertex b = 0; b < g.n(); ++b) {
        if (a == b) continue;
        int common = 0;
        for (Vertex v = 0; v < g.n(); ++v)
          if (v != a && v != b && g.is_edge(a, v) && g.is_edge(b, v)) ++common;
        if (common >= 2) hubs.push_back({a, b});
      }
    if (hubs.empty()) continue;
    const auto [v0, w0] = hubs[rng() % hubs.size()];
    std::vector<Vertex> middles;
    for (Vertex v = 0; v < g.n(); ++v)
      if (v != v0 && v != w0 && g.is_edge(v0, v) && g.is_edge(w0, v)) middles.push_back(v);

    const int alpha = 1 + static_cast<int>(rng() % 2);
    std::vector<int> subset;
    ExponentVector m(g.s(), 0);
    int placed = 0;
    for (Vertex v : middles) {
      const int w = 1 + static_cast<int>(rng() % (q - 1));
      m[g.edge_index(v0, v) - 1] = w;
      subset.push_back(g.edge_index(v0, v));
      placed += w;
    }
    if (placed < alpha * (q - 1) || subset.size() < 2) continue;
    // extra noise away from v0
    for (int i = 1; i <= g.s(); ++i)
      if (g.edge(i).u != v0 && g.edge(i).v != v0 && rng() % 3 == 0) m[i - 1] += rng() % q;

    const ExponentVector out = move_weight(m, v0, subset, w0, alpha, g, q);
    const auto before = weighted_subgraph(m, g);
    const auto after = weighted_subgraph(out, g);
    CHECK(total_degree(out) == total_degree(m));
    CHECK(after.vertex_weights[v0] == before.vertex_weights[v0] - alpha * (q - 1));
    CHECK(after.vertex_weights[w0] >= before.vertex_weights[w0] + alpha * (q - 1));
    for (Vertex v = 0; v < g.n(); ++v)
      if (v != v0 && v != w0) CHECK(after.vertex_weights[v] == before.vertex_weights[v]);
    if (m != out) CHECK(vanishes_on_X(difference_binomial(m, out), g, q));
  }
}

TEST_CASE("swap_endpoints on the K_{1,1,1,1} example") {
  MultipartiteGraph g = build_graph({{1, 1, 1, 1}});
  const ExponentVector m = monomial_on_edges(g, {{{0, 1}, 1}, {{2, 3}, 1}});
  // vi = 0 in part 0, j = part of vertex 1
  const ExponentVector out = swap_endpoints(m, 0, 1, 0, g);
  CHECK(out == monomial_on_edges(g, {{{0, 2}, 1}, {{1, 3}, 1}}));

  const Binomial diff = difference_binomial(m, out);
  auto fam = type_ii(g);
  const Binomial flipped(diff.minus, diff.plus);
  CHECK((std::find(fam.begin(), fam.end(), diff) != fam.end() ||
         std::find(fam.begin(), fam.end(), flipped) != fam.end()));
}

TEST_CASE("swap_endpoints leaves saturated inputs unchanged") {
  MultipartiteGraph g = build_graph({{1, 1, 1, 1}});
  // all of vi's weight already points away from P_j = {1}
  const ExponentVector m = monomial_on_edges(g, {{{0, 2}, 1}, {{2, 3}, 1}});
  CHECK(swap_endpoints(m, 0, 1, 0, g) == m);
}

TEST_CASE("swap_endpoints requires the hypothesis edge") {
  MultipartiteGraph g = build_graph({{1, 1, 2}});
  // the only edge avoiding P_2 = {1} is incident to vi = 0
  const ExponentVector m = monomial_on_edges(g, {{{0, 1}, 1}, {{0, 2}, 1}});
  CHECK_THROWS_AS(swap_endpoints(m, 0, 1, 0, g), NoSwappableEdge);
  CHECK_THROWS_AS(swap_endpoints(m, 0, 0, 0, g), InvalidConfig);
  CHECK_THROWS_AS(swap_endpoints(m, 1, 0, 0, g), InvalidConfig);
}

TEST_CASE("swap_endpoints properties on random valid inputs") {
  std::mt19937 rng(555002);
  int exercised = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::vector<int>> shapes{{1, 1, 2}, {2, 2, 1}, {1, 2, 2}, {2, 3}, {1, 1, 1, 1}};
    MultipartiteGraph g = build_graph({shapes[rng() % shapes.size()]});
    const int q = 3 + static_cast<int>(rng() % 3);
    ExponentVector m(g.s(), 0);
    for (int i = 1; i <= g.s(); ++i)
      if (rng() % 2 == 0) m[i - 1] = rng() % (q - 1);
    const int part_i = static_cast<int>(rng() % g.r());
    int part_j = static_cast<int>(rng() % g.r());
    if (part_j == part_i) part_j = (part_j + 1) % g.r();
    const Vertex vi = g.part_begin(part_i) + static_cast<int>(rng() % g.spec().alphas[part_i]);

    ExponentVector out;
    try {
      out = swap_endpoints(m, part_i, part_j, vi, g);
    } catch (const NoSwappableEdge&) {
      continue;
    }
    ++exercised;

    const auto before = weighted_subgraph(m, g);
    const auto after = weighted_subgraph(out, g);
    CHECK(before.vertex_weights == after.vertex_weights);
    CHECK(total_degree(out) == total_degree(m));

    // delta reached min{wt(vi), Delta_j}
    int delta = 0, big_delta = 0;
    for (int i = 1; i <= g.s(); ++i) {
      if (out[i - 1] == 0) continue;
      const Edge& e = g.edge(i);
      if (g.part_of(e.u) == part_j || g.part_of(e.v) == part_j) continue;
      big_delta += out[i - 1];
      if (e.u == vi || e.v == vi) delta += out[i - 1];
    }
    CHECK(delta == std::min(before.vertex_weights[vi], big_delta));
    if (m != out) CHECK(vanishes_on_X(difference_binomial(m, out), g, q));
  }
  CHECK(exercised > 100);
}

TEST_CASE("witness monomial") {
  MultipartiteGraph g211 = build_graph({{2, 1, 1}});
  const ExponentVector w = witness_monomial(g211, 3);
  CHECK(w == monomial_on_edges(g211, {{{2, 3}, 1}, {{1, 2}, 1}}));
  CHECK(total_degree(w) == 2);  // alpha_1 * (q-2)

  MultipartiteGraph g221 = build_graph({{2, 2, 1}});
  CHECK(total_degree(witness_monomial(g221, 3)) == 2);
  CHECK(total_degree(witness_monomial(g221, 5)) == 2 * 3);

  CHECK_THROWS_AS(witness_monomial(build_graph({{1, 1, 1}}), 3), Unsupported);
  CHECK_THROWS_AS(witness_monomial(build_graph({{2, 2}}), 3), Unsupported);
  CHECK_THROWS_AS(witness_monomial(build_graph({{1, 2, 2}}), 3), Unsupported);
  CHECK_THROWS_AS(witness_monomial(g211, 2), Unsupported);
}

TEST_CASE("witness monomial weight profile") {
  for (const auto& alphas : std::vector<std::vector<int>>{{2, 1, 1}, {2, 2, 1}, {3, 2, 2}}) {
    for (int q : {3, 4, 5}) {
      MultipartiteGraph g = build_graph({alphas});
      const ExponentVector w = witness_monomial(g, q);
      CHECK(total_degree(w) == alphas[0] * (q - 2));
      const auto h = weighted_subgraph(w, g);
      CHECK(h.vertex_weights[0] == 0);  // v1 untouched
      for (Vertex v = 1; v < alphas[0]; ++v) CHECK(h.vertex_weights[v] == q - 2);
    }
  }
}
