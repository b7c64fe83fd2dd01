#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "sigmalab/enumeration.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/families.hpp"
#include "sigmalab/indices.hpp"
#include "sigmalab/tree.hpp"

using namespace sigmalab;
using sigmalab::test::relabel;
using sigmalab::test::spider;

namespace {

std::vector<std::uint32_t> degrees_of(const Tree& t) {
  const DegreeSequence ds = degree_sequence(t);
  return {ds.degrees().begin(), ds.degrees().end()};
}

Tree random_tree(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> seq(n - 2);
  for (auto& a : seq) a = pick(rng);
  return prufer_decode(seq, n);
}

}  // namespace

TEST_SUITE_BEGIN("tree_core");

TEST_CASE("construction rejects non-trees") {
  CHECK_THROWS_AS(Tree(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 3}}), InputError);
  CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), InputError);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 0}, {2, 3}}), InputError);
  CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), InputError);
  CHECK(Tree(1, {}).edge_count() == 0);
}

TEST_CASE("degree") {
  CHECK(degree_of(path(3), 1) == 2);
  Tree s = star(5);
  Vertex center = 0;
  for (Vertex v = 0; v < 5; ++v) {
    if (s.degree(v) == 4) center = v;
  }
  CHECK(degree_of(s, center) == 4);
  CHECK(degree_of(s, center == 0 ? 1 : 0) == 1);
  CHECK_THROWS_AS(degree_of(s, 5), InputError);
}

TEST_CASE("degree_sequence") {
  CHECK(degrees_of(path(4)) == std::vector<std::uint32_t>{2, 2, 1, 1});
  CHECK(degrees_of(star(4)) == std::vector<std::uint32_t>{3, 1, 1, 1});
  CHECK(degrees_of(caterpillar_uniform(3, 1)) == std::vector<std::uint32_t>{3, 2, 2, 1, 1, 1});
  CHECK_THROWS_AS(DegreeSequence({2, 2, 2}), InfeasibleSpec);
  CHECK_THROWS_AS(DegreeSequence({3, 1, 0, 2}), InfeasibleSpec);
  CHECK(DegreeSequence({1, 3, 1, 1})[0] == 3);
}

TEST_CASE("is_caterpillar") {
  CHECK(is_caterpillar(path(6)));
  CHECK_FALSE(is_caterpillar(spider({2, 2, 2})));
  CHECK(is_caterpillar(star(7)));
  CHECK(is_caterpillar(Tree(1, {})));
  CHECK(is_caterpillar(path(2)));
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(Tree(3, {{0, 1}, {1, 2}})) == canonical_form(Tree(3, {{1, 0}, {0, 2}})));
  CHECK(canonical_form(path(4)) != canonical_form(star(4)));
  CHECK_FALSE(are_isomorphic(path(5), star(5)));

  std::set<std::vector<std::uint32_t>> codes;
  labeled_trees_prufer(4, [&](const Tree& t) { codes.insert(canonical_form(t).code); });
  CHECK(codes.size() == 2);
  CHECK(prufer_class_count(6) == 6);
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(20261015);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const Tree& t : free_trees(n)) {
      const CanonicalForm expected = canonical_form(t);
      for (int i = 0; i < 100; ++i) REQUIRE(canonical_form(relabel(t, rng)) == expected);
    }
  }
}

TEST_CASE("isomorphism is an equivalence on small trees") {
  std::mt19937 rng(7);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto trees = free_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      const Tree shuffled = relabel(trees[i], rng);
      CHECK(are_isomorphic(trees[i], trees[i]));
      CHECK(are_isomorphic(trees[i], shuffled));
      CHECK(are_isomorphic(shuffled, trees[i]));
      for (std::size_t j = 0; j < trees.size(); ++j) {
        REQUIRE(are_isomorphic(shuffled, trees[j]) == (i == j));
      }
    }
  }
}

TEST_CASE("level sequence round trip") {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Tree& t : free_trees(n)) {
      const auto code = canonical_form(t).code;
      REQUIRE(canonical_form(tree_from_level_sequence(code)).code == code);
    }
  }
  CHECK_THROWS_AS(tree_from_level_sequence(std::vector<std::uint32_t>{0, 2}), InputError);
  CHECK_THROWS_AS(tree_from_level_sequence(std::vector<std::uint32_t>{1, 2}), InputError);
}

TEST_CASE("pruefer round trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Tree t = random_tree(2 + rng() % 12, rng);
    const Tree back = prufer_decode(prufer_encode(t), t.vertex_count());
    std::set<Edge> a, b;
    for (Edge e : t.edges()) a.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    for (Edge e : back.edges()) b.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    REQUIRE(a == b);
  }
}

TEST_CASE("degree preserving swap") {
  SUBCASE("sigma changes by 2(d(u)-d(x))(d(v)-d(y))") {
    std::mt19937 rng(11);
    int applied = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const Tree t = random_tree(10, rng);
      const auto edges = t.edges();
      Edge e1 = edges[rng() % edges.size()];
      Edge e2 = edges[rng() % edges.size()];
      if (rng() & 1) std::swap(e1.u, e1.v);
      const Vertex u = e1.u, v = e1.v, x = e2.u, y = e2.v;
      if (u == x || u == y || v == x || v == y || t.has_edge(u, y) || t.has_edge(x, v)) {
        CHECK_THROWS_AS(degree_preserving_swap(t, u, v, x, y), InputError);
        continue;
      }
      const SwapResult r = degree_preserving_swap(t, u, v, x, y);
      if (!r) {
        CHECK(r.rejection == "disconnects");
        continue;
      }
      ++applied;
      CHECK(degrees_of(*r.tree) == degrees_of(t));
      const IndexValue delta = 2 * (IndexValue(t.degree(u)) - t.degree(x)) * (IndexValue(t.degree(v)) - t.degree(y));
      CHECK(sigma(*r.tree) - sigma(t) == delta);
      CHECK(sigma_swap_delta(t, u, v, x, y) == delta);
    }
    CHECK(applied > 20);
  }

  SUBCASE("equal degrees leave sigma unchanged") {
    // path 0-1-2-3-4-5: u=1, x=3 have equal degree
    const Tree p = path(6);
    const SwapResult r = degree_preserving_swap(p, 1, 0, 3, 4);
    REQUIRE(r);
    CHECK(sigma(*r.tree) == sigma(p));
  }

  SUBCASE("cycle-closing rewiring is rejected") {
    const SwapResult r = degree_preserving_swap(path(5), 0, 1, 3, 4);
    CHECK_FALSE(r);
    CHECK(r.rejection == "disconnects");
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(degree_preserving_swap(path(5), 0, 2, 3, 4), InputError);
    CHECK_THROWS_AS(degree_preserving_swap(path(5), 0, 1, 1, 2), InputError);
  }
}

TEST_CASE("text formats") {
  const Tree p3 = parse_tree("3\n0 1\n1 2\n");
  CHECK(are_isomorphic(p3, path(3)));
  CHECK(serialize_tree(parse_tree(serialize_tree(path(3)))) == serialize_tree(path(3)));
  CHECK(parse_tree_compact(serialize_tree_compact(star(5))).edge_count() == 4);
  CHECK(are_isomorphic(parse_tree("prufer: 0 0 0"), star(5)));
  CHECK(to_dot(path(2)).find("0 -- 1;") != std::string::npos);

  try {
    parse_tree("4\n0 1\n2 3\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("edge count") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_tree("x\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("3\n0 1\n1 7\n"), ParseError);
  CHECK_THROWS_AS(parse_tree("4\n0 1\n1 0\n2 3\n"), ParseError);
  try {
    parse_tree("3\n0 1\n1 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_SUITE_END();
