#include <doctest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "signlap/errors.hpp"
#include "signlap/graph.hpp"
#include "signlap/json_io.hpp"

using namespace signlap;

namespace {

SignedWeightedGraph triangle(Rational red) {
  return SignedWeightedGraph(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, red}});
}

}  // namespace

TEST_CASE("graph JSON parsing") {
  const auto g = graph_from_json(Json::parse(R"({"n":2,"edges":[{"u":0,"v":1,"w":"2"}]})"));
  CHECK(g.vertex_count() == 2);
  CHECK(g.black_count() == 1);
  CHECK(g.red_count() == 0);

  const auto h = graph_from_json(
      Json::parse(R"({"n":3,"edges":[{"u":0,"v":1,"w":"1"},{"u":1,"v":2,"w":"3"},{"u":0,"v":2,"w":"-1/2"}]})"));
  REQUIRE(h.red_count() == 1);
  const Edge& red = h.edges()[h.red_positions()[0]];
  CHECK(red.u == 0);
  CHECK(red.v == 2);
  CHECK(red.red_label == 1);
  CHECK(red.weight == Rational(-1, 2));
}

TEST_CASE("invalid graphs name the offending edge") {
  auto message = [](const char* doc) -> std::string {
    try {
      graph_from_json(Json::parse(doc));
    } catch (const InvalidInput& e) {
      return e.what();
    }
    return "";
  };
  CHECK(message(R"({"n":2,"edges":[{"u":0,"v":0,"w":"1"}]})").find("self-loop") != std::string::npos);
  CHECK(message(R"({"n":2,"edges":[{"u":0,"v":1,"w":"0"}]})").find("zero weight") != std::string::npos);
  CHECK(message(R"({"n":2,"edges":[{"u":0,"v":2,"w":"1"}]})").find("out of range") != std::string::npos);
  const auto dup = message(R"({"n":2,"edges":[{"u":0,"v":1,"w":"1"},{"u":1,"v":0,"w":"2"}]})");
  CHECK(dup.find("duplicate") != std::string::npos);
  CHECK(dup.find("#1") != std::string::npos);
  CHECK(message(R"({"n":2,"edges":[{"u":0,"v":1,"w":"x"}]})").find("edge #0") != std::string::npos);
  CHECK(message(R"({"edges":[]})").find("'n'") != std::string::npos);
}

TEST_CASE("red labels follow edge order, not magnitude") {
  const SignedWeightedGraph g(4, {{0, 1, -5}, {1, 2, 1}, {2, 3, Rational(-1, 9)}});
  REQUIRE(g.red_count() == 2);
  CHECK(g.edges()[g.red_positions()[0]].weight == -5);
  CHECK(g.edges()[g.red_positions()[1]].weight == Rational(-1, 9));
}

TEST_CASE("component counts") {
  const auto shared = oracle::complete_with_reds(4, {{0, 1}, {0, 2}});
  CHECK(component_counts(shared) == ComponentCounts{1, 1, 2});
  const auto disjoint = oracle::complete_with_reds(4, {{0, 1}, {2, 3}});
  CHECK(component_counts(disjoint) == ComponentCounts{1, 1, 2});
  const SignedWeightedGraph black(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  CHECK(component_counts(black) == ComponentCounts{1, 1, 5});
  const SignedWeightedGraph split(4, {{0, 1, 1}, {2, 3, -1}});
  CHECK(component_counts(split) == ComponentCounts{2, 3, 3});
}

TEST_CASE("minor sums parallel weights") {
  const auto k4 = oracle::complete_with_reds(4, {{0, 1}});
  const int contract[] = {1};
  const auto m = minor(k4, contract, {});
  CHECK(m.vertex_count() == 3);
  using T = std::tuple<Vertex, Vertex, Rational>;
  CHECK(canonical_edges(m) == std::vector<T>{{0, 1, 2}, {0, 2, 2}, {1, 2, 1}});

  CHECK(canonical_edges(minor(k4, {}, {})) == canonical_edges(k4));

  const auto tri = triangle(-1);
  const int del[] = {1};
  const auto path = minor(tri, {}, del);
  CHECK(path.edges().size() == 2);
  CHECK(is_connected(path));
}

TEST_CASE("minor drops zero-sum merged edges and keeps labels") {
  // Contracting (0,1) merges (0,2) weight 1 with (1,2) weight -1.
  const SignedWeightedGraph g(3, {{0, 1, -1}, {0, 2, 1}, {1, 2, -1}});
  const int contract[] = {1};
  const auto m = minor(g, contract, {});
  CHECK(m.vertex_count() == 2);
  CHECK(m.edges().empty());

  const SignedWeightedGraph h(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, -1}, {0, 3, -2}});
  const auto hm = minor(h, contract, {});
  CHECK(hm.red_labels() == std::vector<int>{2, 3});
}

TEST_CASE("minor rejects bad index sets") {
  const auto g = oracle::complete_with_reds(4, {{0, 1}, {2, 3}});
  const int one[] = {1};
  const int missing[] = {3};
  CHECK_THROWS_AS(minor(g, one, one), InvalidInput);
  CHECK_THROWS_AS(minor(g, missing, {}), InvalidInput);
}

TEST_CASE("minor: contraction order independence") {
  oracle::Rng rng(11);
  oracle::GraphShape shape;
  shape.min_red = 3;
  shape.max_red = 4;
  shape.unit_reds = false;
  int compared = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    auto labels = g.red_labels();
    rng.shuffle(labels);
    const std::vector<int> a{labels[0]}, b{labels[1]}, c{labels[2]};
    const std::vector<int> ab{labels[0], labels[1]};
    const auto first = minor(g, a, c);
    // b may have merged into a parallel edge or become a loop
    if (!first.find_red(labels[1])) continue;
    ++compared;
    CHECK(canonical_edges(minor(g, ab, c)) == canonical_edges(minor(first, b, {})));
  }
  CHECK(compared > 50);
}

TEST_CASE("spanning tree enumeration") {
  const auto unit = triangle(1);
  const auto trees = spanning_trees(unit);
  CHECK(trees.size() == 3);
  for (const auto& t : trees) CHECK(t.weight_product == 1);

  const auto signed_tri = triangle(-1);
  Rational sum = 0;
  std::multiset<Rational> products;
  for (const auto& t : spanning_trees(signed_tri)) {
    products.insert(t.weight_product);
    sum += t.weight_product;
  }
  CHECK(products == std::multiset<Rational>{-1, -1, 1});
  CHECK(sum == -1);

  const SignedWeightedGraph path(4, {{0, 1, 2}, {1, 2, 3}, {2, 3, -1}});
  const auto only = spanning_trees(path);
  REQUIRE(only.size() == 1);
  CHECK(only[0].edges.size() == 3);
  CHECK(only[0].black_product == 6);

  CHECK(spanning_trees(SignedWeightedGraph(3, {{0, 1, 1}})).empty());
}

TEST_CASE("tree and forest sizes, checked exhaustively on random graphs") {
  oracle::Rng rng(3);
  oracle::GraphShape shape;
  shape.max_vertices = 6;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    const int n = g.vertex_count();
    for (const auto& t : spanning_trees(g)) CHECK(static_cast<int>(t.edges.size()) == n - 1);
    for_each_spanning_forest(g, 2, [&](std::span<const std::size_t> f) { CHECK(static_cast<int>(f.size()) == n - 2); });
  }
}

TEST_CASE("unit-weight tree count matches the subset oracle") {
  oracle::Rng rng(5);
  oracle::GraphShape shape;
  shape.max_vertices = 6;
  shape.unit_blacks = false;
  shape.unit_reds = false;
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    if (g.edges().size() > 16) continue;
    std::vector<std::array<Vertex, 2>> ends;
    std::vector<Rational> w;
    for (const auto& e : g.edges()) {
      ends.push_back({e.u, e.v});
      w.push_back(e.weight);
    }
    Rational sum = 0;
    for (const auto& t : spanning_trees(g)) sum += t.weight_product;
    CHECK(sum == oracle::subset_tree_sum(g.vertex_count(), ends, w));
  }
}

TEST_CASE("2-forests on a 4-cycle") {
  const SignedWeightedGraph c4(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  const auto forests = spanning_2forests(c4, {0, 1}, {2, 3});
  REQUIRE(!forests.empty());
  for (const auto& f : forests) {
    const auto& comp = f.forest.component_of;
    CHECK(comp[0] != comp[1]);
    CHECK(comp[2] != comp[3]);
    CHECK(f.sign == (comp[2] == comp[0] ? 1 : -1));
  }
}

TEST_CASE("2-forests on a path with U = W") {
  const SignedWeightedGraph path(3, {{0, 1, 1}, {1, 2, 1}});
  const auto forests = spanning_2forests(path, {0, 1}, {0, 1});
  REQUIRE(forests.size() == 1);  // only {0} | {1,2}
  CHECK(forests[0].sign == 1);
  const auto swapped = spanning_2forests(path, {0, 1}, {1, 0});
  REQUIRE(swapped.size() == 1);
  CHECK(swapped[0].sign == -1);
}

TEST_CASE("2-forests: unsatisfiable pairing gives nothing") {
  // On a path only the cut of edge (0,1) separates 0 from 1.
  const SignedWeightedGraph g(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}});
  CHECK(spanning_2forests(g, {0, 1}, {0, 1}).size() == 1);
  // Here the only 2-forest keeps 0 and 1 together.
  const SignedWeightedGraph two(4, {{0, 1, 1}, {2, 3, 1}});
  CHECK(spanning_2forests(two, {0, 1}, {2, 3}).empty());
}

TEST_CASE("sign flips when U is enumerated the other way") {
  oracle::Rng rng(8);
  oracle::GraphShape shape;
  shape.max_vertices = 6;
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng, shape);
    const int n = g.vertex_count();
    const Vertex a = rng.uniform(0, n - 1);
    Vertex b = rng.uniform(0, n - 2);
    if (b >= a) ++b;
    const Vertex c = rng.uniform(0, n - 1);
    Vertex d = rng.uniform(0, n - 2);
    if (d >= c) ++d;
    const auto fwd = spanning_2forests(g, {a, b}, {c, d});
    const auto rev = spanning_2forests(g, {b, a}, {c, d});
    REQUIRE(fwd.size() == rev.size());
    std::map<std::vector<std::size_t>, int> sign_of;
    for (const auto& f : fwd) sign_of[f.forest.edges] = f.sign;
    for (const auto& f : rev) CHECK(sign_of.at(f.forest.edges) == -f.sign);
  }
}
