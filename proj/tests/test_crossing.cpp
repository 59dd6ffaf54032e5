#include <doctest.h>

#include "oracles.hpp"
#include "signlap/crossing.hpp"
#include "signlap/errors.hpp"
#include "signlap/json_io.hpp"

using namespace signlap;

namespace {

const auto kShared = oracle::complete_with_reds(4, {{0, 1}, {0, 2}});
const auto kDisjoint = oracle::complete_with_reds(4, {{0, 1}, {2, 3}});

std::vector<Rational> v(std::initializer_list<Rational> xs) { return xs; }

}  // namespace

TEST_CASE("mask strings put red 1 leftmost") {
  CHECK(mask_to_string(0b01, 2) == "10");
  CHECK(mask_to_string(0b110, 3) == "011");
  CHECK(mask_from_string("10") == 0b01);
  CHECK(mask_from_string("011") == 0b110);
  CHECK_THROWS_AS(mask_from_string("1x"), InvalidInput);
}

TEST_CASE("K4 coefficients") {
  CHECK(coefficients(kShared).coefficients() == v({3, 5, 5, 3}));
  CHECK(coefficients(kDisjoint).coefficients() == v({4, 4, 4, 4}));
  const SignedWeightedGraph black(3, {{0, 1, 2}, {1, 2, 3}, {0, 2, 1}});
  const auto p = coefficients(black);
  CHECK(p.red_count() == 0);
  CHECK(p.coefficients() == v({tree_constant(black)}));
}

TEST_CASE("coefficients guard R") {
  std::vector<EdgeSpec> specs;
  for (int k = 0; k < 4; ++k) specs.push_back({k, k + 1, Rational(-1)});
  const SignedWeightedGraph g(5, specs);
  CHECK_THROWS_AS(coefficients(g, 3), InvalidInput);
  CHECK_NOTHROW(coefficients(g, 4));
}

TEST_CASE("evaluate") {
  CHECK(evaluate(coefficients(kShared), v({1, 1})) == -4);
  CHECK(evaluate(coefficients(kDisjoint), v({1, 1})) == 0);
  CHECK(evaluate(coefficients(kShared), v({0, 0})) == 3);
  CHECK_THROWS_AS(evaluate(coefficients(kShared), v({1})), InvalidInput);
}

TEST_CASE("determinant and enumeration routes agree") {
  oracle::Rng rng(31);
  oracle::GraphShape shape;
  shape.max_red = 4;
  shape.unit_blacks = false;
  shape.unit_reds = false;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    const auto p = coefficients(g);
    CHECK(p == coefficients_by_enumeration(g));
    for (const auto& a : p.coefficients()) CHECK(a >= 0);
    CHECK((p.coefficient(0) > 0) == (component_counts(g).positive == 1));
    const auto t = oracle::random_t(rng, g.red_count());
    CHECK(evaluate(p, t) == tree_constant(g, t));
  }
}

TEST_CASE("red cycles zero their coefficient") {
  // triangle of reds plus a black pendant
  const SignedWeightedGraph g(4, {{0, 1, -1}, {1, 2, -1}, {0, 2, -1}, {2, 3, 1}});
  CHECK(red_subset_has_cycle(g, 0b111));
  CHECK_FALSE(red_subset_has_cycle(g, 0b011));
  CHECK(coefficients(g).coefficient(0b111) == 0);
}

TEST_CASE("sum of coefficients counts trees of the unsigned graph") {
  const auto p = coefficients(kShared);
  Rational total = 0;
  for (const auto& a : p.coefficients()) total += a;
  CHECK(total == 16);
}

TEST_CASE("degree support") {
  CHECK(degree_support(coefficients(kShared), kShared) == DegreeRange{0, 2});
  const SignedWeightedGraph path(3, {{0, 1, 1}, {1, 2, -1}});
  const auto p = coefficients(path);
  CHECK(p.coefficients() == v({0, 1}));
  CHECK(degree_support(p, path) == DegreeRange{1, 1});
  const SignedWeightedGraph black(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(degree_support(coefficients(black), black) == DegreeRange{0, 0});
  const SignedWeightedGraph split(4, {{0, 1, 1}, {2, 3, -1}});
  CHECK_FALSE(degree_support(coefficients(split), split));
}

TEST_CASE("degree support violation is an internal fault") {
  const CrossingPolynomial wrong(2, v({0, 5, 5, 3}));
  CHECK_THROWS_AS(degree_support(wrong, kShared), InternalFault);
}

TEST_CASE("degree support holds on random graphs") {
  oracle::Rng rng(32);
  oracle::GraphShape shape;
  shape.max_red = 5;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    const auto counts = component_counts(g);
    const auto range = degree_support(coefficients(g), g);
    REQUIRE(range);
    CHECK(range->low == counts.positive - 1);
    CHECK(range->high == g.vertex_count() - counts.negative);
  }
}

TEST_CASE("ray polynomial") {
  CHECK(ray_polynomial(coefficients(kShared), v({1, 1})).coefficients() == v({3, -10, 3}));
  CHECK(ray_polynomial(coefficients(kDisjoint), v({1, 1})).coefficients() == v({4, -8, 4}));
  CHECK(ray_polynomial(coefficients(kShared), v({2, Rational(1, 7)})).coefficient(0) == 3);
  CHECK_THROWS_AS(ray_polynomial(coefficients(kShared), v({1, 0})), InvalidInput);
}

TEST_CASE("ray crossings") {
  const auto shared = ray_crossings(coefficients(kShared), v({1, 1}));
  REQUIRE(shared.roots.size() == 2);
  CHECK(shared.roots[0].exact == Rational(1, 3));
  CHECK(shared.roots[1].exact == Rational(3));
  CHECK(shared.roots[0].multiplicity == 1);
  CHECK(shared.total_multiplicity() == 2);

  const auto disjoint = ray_crossings(coefficients(kDisjoint), v({1, 1}));
  REQUIRE(disjoint.roots.size() == 1);
  CHECK(disjoint.roots[0].exact == Rational(1));
  CHECK(disjoint.roots[0].multiplicity == 2);

  const SignedWeightedGraph black(3, {{0, 1, 1}, {1, 2, 1}});
  CHECK(ray_crossings(coefficients(black), {}).roots.empty());
}

TEST_CASE("crossings agree with inertia along the ray") {
  oracle::Rng rng(33);
  oracle::GraphShape shape;
  shape.max_red = 3;
  shape.unit_blacks = false;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    std::vector<Rational> alpha;
    for (int k = 0; k < g.red_count(); ++k) alpha.push_back(rng.positive());
    const auto crossings = ray_crossings(coefficients(g), alpha);
    CHECK(crossings.total_multiplicity() == tau(g));
    auto at = [&](const Rational& s) {
      std::vector<Rational> t;
      for (const auto& a : alpha) t.push_back(a * s);
      return inertia(laplacian(g, t));
    };
    int positive = component_counts(g).positive - 1;
    Rational previous = 0;
    for (const auto& root : crossings.roots) {
      CHECK(at((previous + root.lower) / 2).positive == positive);
      if (root.exact) CHECK(at(*root.exact).zero == 1 + root.multiplicity);
      positive += root.multiplicity;
      previous = root.upper;
    }
    CHECK(at(previous * 2 + 1).positive == positive);
  }
}

TEST_CASE("polynomial JSON round trip") {
  const auto p = coefficients(kShared);
  const auto j = polynomial_to_json(p);
  CHECK(j["coefficients"]["10"] == "5");
  CHECK(polynomial_from_json(j) == p);
}
