#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "mvi/finite_field.hpp"

using namespace mvi;

TEST_CASE("GF(3) arithmetic") {
  FieldTable f = build_field(3);
  CHECK(f.add(f.element(1), f.element(2)) == f.zero());
  CHECK(f.mul(f.element(2), f.element(2)) == f.one());
  CHECK(f.inv(f.element(2)) == f.element(2));
  CHECK(f.spec().p == 3);
  CHECK(f.spec().k == 1);
  CHECK(f.spec().modulus.empty());
}

TEST_CASE("GF(4) uses x^2+x+1 and a*a = a+1") {
  FieldTable f = build_field(4);
  CHECK(f.spec().p == 2);
  CHECK(f.spec().k == 2);
  CHECK(f.spec().modulus == std::vector<int>{1, 1, 1});
  const FieldElement a = f.element(2);  // class of x
  CHECK(f.mul(a, a) == f.add(a, f.one()));
  CHECK(units(f).size() == 3);
}

TEST_CASE("rejects non prime powers and oversized orders") {
  CHECK_THROWS_AS(build_field(6), NotPrimePower);
  CHECK_THROWS_AS(build_field(12), NotPrimePower);
  CHECK_THROWS_AS(build_field(1), NotPrimePower);
  CHECK_THROWS_AS(build_field(0), NotPrimePower);
  CHECK_THROWS_AS(build_field(4099), TooLarge);
  CHECK_NOTHROW(build_field(4096));
}

TEST_CASE("primitive elements") {
  CHECK(primitive_element(build_field(2)) == FieldElement{1});
  CHECK(primitive_element(build_field(3)) == FieldElement{2});

  FieldTable f5 = build_field(5);
  const FieldElement g = primitive_element(f5);
  FieldElement x = g;
  for (int i = 1; i < 4; ++i) {
    CHECK(x != f5.one());
    x = f5.mul(x, g);
  }
  CHECK(x == f5.one());
}

TEST_CASE("units are the q-1 invertible elements") {
  for (int q : {2, 3, 4, 9}) {
    FieldTable f = build_field(q);
    auto u = units(f);
    CHECK(static_cast<int>(u.size()) == q - 1);
    std::set<FieldElement> distinct(u.begin(), u.end());
    CHECK(distinct.size() == u.size());
    for (FieldElement x : u) CHECK(f.mul(x, f.inv(x)) == f.one());
  }
}

static void check_axioms(const FieldTable& f, FieldElement x, FieldElement y, FieldElement z) {
  CHECK(f.add(x, y) == f.add(y, x));
  CHECK(f.mul(x, y) == f.mul(y, x));
  CHECK(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
  CHECK(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
  CHECK(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
  CHECK(f.add(x, f.zero()) == x);
  CHECK(f.mul(x, f.one()) == x);
  CHECK(f.add(x, f.neg(x)) == f.zero());
}

TEST_CASE("field axioms, exhaustive for small q") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16}) {
    FieldTable f = build_field(q);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) check_axioms(f, f.element(x), f.element(y), f.element(z));
  }
}

TEST_CASE("field axioms, random triples for larger q") {
  std::mt19937 rng(20240803);
  for (int q : {25, 27, 64, 121, 243, 1024}) {
    FieldTable f = build_field(q);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int trial = 0; trial < 200; ++trial)
      check_axioms(f, f.element(pick(rng)), f.element(pick(rng)), f.element(pick(rng)));
  }
}

TEST_CASE("Fermat: x^(q-1) = 1 for nonzero x") {
  for (int q : {2, 3, 4, 5, 8, 9, 27}) {
    FieldTable f = build_field(q);
    for (FieldElement x : units(f)) CHECK(f.pow(x, q - 1) == f.one());
  }
}

TEST_CASE("powers of the primitive element enumerate the units") {
  for (int q : {3, 4, 5, 9, 16}) {
    FieldTable f = build_field(q);
    const FieldElement g = primitive_element(f);
    std::set<FieldElement> seen;
    for (int e = 0; e < q - 1; ++e) seen.insert(f.pow(g, e));
    auto u = units(f);
    CHECK(seen == std::set<FieldElement>(u.begin(), u.end()));
  }
}

TEST_CASE("pow handles zero and exponent reduction") {
  FieldTable f = build_field(5);
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 7) == f.zero());
  CHECK(f.pow(f.element(3), 0) == f.one());
  CHECK(f.pow(f.element(3), 4 * 1000 + 1) == f.element(3));
  CHECK_THROWS_AS(f.inv(f.zero()), Error);
}
