#include <vector>

#include "doctest.h"
#include "sigmalab/enumeration.hpp"
#include "sigmalab/errors.hpp"
#include "sigmalab/families.hpp"
#include "sigmalab/indices.hpp"

using namespace sigmalab;

namespace {

std::vector<std::uint32_t> degrees_of(const Tree& t) {
  const DegreeSequence ds = degree_sequence(t);
  return {ds.degrees().begin(), ds.degrees().end()};
}

}  // namespace

TEST_SUITE_BEGIN("families");

TEST_CASE("path and star") {
  CHECK(are_isomorphic(path(2), star(2)));
  CHECK(degrees_of(path(5)) == std::vector<std::uint32_t>{2, 2, 2, 1, 1});
  CHECK(sigma(path(5)) == 2);
  CHECK(sigma(star(5)) == 36);
  CHECK(path(1).vertex_count() == 1);
  CHECK_THROWS_AS(path(0), InputError);
  CHECK_THROWS_AS(star(1), InputError);
}

TEST_CASE("double_star") {
  const Tree t = double_star(2, 3);
  CHECK(t.vertex_count() == 5);
  CHECK(t.degree(0) == 3);
  CHECK(t.degree(1) == 2);
  CHECK(sigma(t) == 10);
  CHECK(sigma(double_star(1, 1)) == 0);
  for (std::size_t m = 1; m <= 5; ++m) {
    CHECK(sigma(double_star(m + 1, m + 1)) == 2 * IndexValue(m) * m * m);
  }
  CHECK_THROWS_AS(double_star(0, 2), InputError);
}

TEST_CASE("caterpillars") {
  CHECK(sigma(caterpillar_uniform(3, 1)) == 8);
  CHECK(caterpillar_uniform(4, 2).vertex_count() == 12);
  CHECK(are_isomorphic(caterpillar_uniform(5, 0), path(5)));
  CHECK(are_isomorphic(caterpillar_uniform(1, 4), star(5)));

  const std::vector<std::uint32_t> spine{2, 3, 2};
  CHECK(are_isomorphic(caterpillar_spine(spine), caterpillar_uniform(3, 1)));
  const std::vector<std::uint32_t> p2{3, 4, 3};
  CHECK(sigma(caterpillar_spine(p2)) == 36);
  const std::vector<std::uint32_t> edge{1, 1};
  CHECK(caterpillar_spine(edge).vertex_count() == 2);
  const std::vector<std::uint32_t> ordered{4, 1, 3};
  CHECK_THROWS_AS(caterpillar_spine(ordered), InfeasibleSpec);

  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t p = 0; p <= 3; ++p) CHECK(is_caterpillar(caterpillar_uniform(n, p)));
  }
}

TEST_CASE("greedy trees") {
  for (GreedyVariant v : {GreedyVariant::paper, GreedyVariant::bfs}) {
    CHECK(are_isomorphic(greedy_tree(DegreeSequence({2, 2, 1, 1}), v), path(4)));
    CHECK(are_isomorphic(greedy_tree(DegreeSequence({3, 1, 1, 1}), v), star(4)));
    const Tree ds33 = greedy_tree(DegreeSequence({3, 3, 1, 1, 1, 1}), v);
    CHECK(are_isomorphic(ds33, double_star(3, 3)));
    CHECK(sigma(ds33) == 16);
  }
  CHECK(trees_with_degree_sequence(DegreeSequence({3, 3, 1, 1, 1, 1})).size() == 1);

  for (std::size_t n = 2; n <= 10; ++n) {
    for (const DegreeSequence& ds : tree_graphic_sequences(n)) {
      for (GreedyVariant v : {GreedyVariant::paper, GreedyVariant::bfs}) {
        REQUIRE(degree_sequence(greedy_tree(ds, v)) == ds);
      }
    }
  }
}

TEST_CASE("three-level trees") {
  CHECK(three_level_tree(3, 1, 1, 1).vertex_count() == 12);
  CHECK(sigma(three_level_tree(3, 1, 1, 1)) == 6);
  CHECK(sigma(three_level_tree(3, 2, 2, 2)) == 100);
  CHECK(three_level_tree(4, 2, 1, 3).vertex_count() == 44);
  CHECK(three_level_tree(3, 2, 0, 0).vertex_count() == 9);
  CHECK_THROWS_AS(three_level_tree(2, 1, 1, 1), InputError);

  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t p = 1; p <= 3; ++p) {
      for (std::size_t r = 1; r <= 3; ++r) {
        for (std::size_t s = 1; s <= 3; ++s) {
          const Tree t = three_level_tree(n, p, r, s);
          REQUIRE(t.vertex_count() == n * (1 + p + p * r + p * r * s));
          REQUIRE_FALSE(is_caterpillar(t));
          const std::vector<std::uint32_t> d{static_cast<std::uint32_t>(1 + r), static_cast<std::uint32_t>(1 + s)};
          REQUIRE(are_isomorphic(t, k_level_tree(n, p, d)));
        }
      }
    }
  }
}

TEST_CASE("squared and power level trees") {
  CHECK(squared_level_tree(3, 1, 1, 1).vertex_count() == 42);
  CHECK(sigma(power_level_tree(3, 1)) == 6);
  CHECK(sigma(power_level_tree(3, 2)) == 6468);
  for (std::size_t n = 3; n <= 5; ++n) {
    for (std::size_t p = 1; p <= 3; ++p) {
      const std::uint64_t l2 = p * (2 * p - 1);
      CHECK(power_level_tree(n, p).vertex_count() == n * (1 + p + l2 + l2 * (2 * p * p - 1)));
    }
  }
}

TEST_CASE("k-level trees") {
  const std::vector<std::uint32_t> d22{2, 2};
  CHECK(are_isomorphic(k_level_tree(3, 1, d22), three_level_tree(3, 1, 1, 1)));
  const std::vector<std::uint32_t> d32{3, 2};
  // spine 3, level sizes 6, 12, 12
  CHECK(k_level_tree(3, 2, d32).vertex_count() == 3 + 6 + 12 + 12);
  const std::vector<std::uint32_t> bad{3, 1};
  CHECK_THROWS_AS(k_level_tree(3, 2, bad), InputError);
  const std::vector<std::uint32_t> huge{50, 50, 50, 50};
  CHECK_THROWS_AS(k_level_tree(10, 10, huge), ResourceError);
}

TEST_CASE("family spec strings") {
  const FamilySpec spec = parse_family_spec("family=k_level;n=3;p=1;d=2,2");
  CHECK(spec.family == Family::k_level);
  CHECK(spec.scalar("n") == 3);
  CHECK(spec.list("d") == std::vector<std::int64_t>{2, 2});
  CHECK(format_family_spec(spec) == "family=k_level;d=2,2;n=3;p=1");
  CHECK(are_isomorphic(build_family(spec), three_level_tree(3, 1, 1, 1)));

  const Tree g = build_family(parse_family_spec("family=greedy_paper;ds=3,2,2,1,1,1"));
  CHECK(degrees_of(g) == std::vector<std::uint32_t>{3, 2, 2, 1, 1, 1});
  CHECK(build_family(parse_family_spec("family=caterpillar_uniform;n=3;p=1")).vertex_count() == 6);

  CHECK_THROWS_AS(parse_family_spec("family=nope;n=3"), InputError);
  CHECK_THROWS_AS(parse_family_spec("n=3"), InputError);
  CHECK_THROWS_AS(parse_family_spec("family=path;n=x"), InputError);
  CHECK_THROWS_AS(build_family(parse_family_spec("family=greedy_bfs;ds=2,2,2")), InfeasibleSpec);
  CHECK_THROWS_AS(build_family(parse_family_spec("family=path")), InputError);
}

TEST_SUITE_END();
