#include <doctest.h>

#include "fixtures.hpp"
#include "urykat/metric_space.hpp"
#include "urykat/oracle.hpp"

using namespace urykat;
using namespace urykat::testing;

TEST_CASE("singleton space is valid") {
  auto s = singleton();
  CHECK(s->size() == 1);
  CHECK(s->diameter_all() == 0);
}

TEST_CASE("triangle violation is reported with its witness") {
  std::vector<std::string> pts{"a", "b", "c"};
  std::vector<std::vector<Rational>> d{{rat(0), rat(1), rat(3)},
                                       {rat(1), rat(0), rat(1)},
                                       {rat(3), rat(1), rat(0)}};
  auto violation = MetricSpace::check(pts, d, false);
  REQUIRE(violation.has_value());
  CHECK(violation->kind == Errc::triangle_violation);
  CHECK(violation->i == 0);
  CHECK(violation->j == 1);
  CHECK(violation->k == 2);
  CHECK_THROWS_AS(MetricSpace::create(pts, d, false), Error);
}

TEST_CASE("path space is valid and every axiom holds exhaustively") {
  auto s = path3();
  for (int i = 0; i < 3; ++i) {
    CHECK(s->dist(i, i) == 0);
    for (int j = 0; j < 3; ++j) {
      CHECK(s->dist(i, j) == s->dist(j, i));
      if (i != j) CHECK(s->dist(i, j) > 0);
      for (int k = 0; k < 3; ++k) {
        CHECK(s->dist(i, k) <= s->dist(i, j) + s->dist(j, k));
      }
    }
  }
}

TEST_CASE("asymmetry, negativity and zero-distance are caught") {
  auto asym = MetricSpace::check({"a", "b"}, {{rat(0), rat(1)}, {rat(2), rat(0)}}, false);
  REQUIRE(asym);
  CHECK(asym->kind == Errc::asymmetric);
  auto neg = MetricSpace::check({"a", "b"}, {{rat(0), rat(-1)}, {rat(-1), rat(0)}}, false);
  REQUIRE(neg);
  CHECK(neg->kind == Errc::negative_distance);
  auto zero = MetricSpace::check({"a", "b"}, {{rat(0), rat(0)}, {rat(0), rat(0)}}, false);
  REQUIRE(zero);
  CHECK(zero->kind == Errc::zero_distance_distinct);
  CHECK(!MetricSpace::check({"a", "b"}, {{rat(0), rat(0)}, {rat(0), rat(0)}}, true));
}

TEST_CASE("diameter") {
  CHECK(diameter(subspace(singleton(), {0})) == 0);
  CHECK(diameter(subspace(pair_space(Rational(2)), {0, 1})) == 2);
  CHECK(diameter(subspace(equilateral3(), {0, 1, 2})) == 1);
  CHECK_THROWS_AS(diameter(SubspaceRef{path3(), {}}), Error);
}

TEST_CASE("dist_to_set") {
  auto s = path3();
  CHECK(dist_to_set(*s, 0, {0, 1}) == 0);
  CHECK(dist_to_set(*s, 0, {1, 2}) == 1);
  CHECK(dist_to_set(*s, 0, {0, 1, 2}) == 0);
  CHECK_THROWS_AS(dist_to_set(*s, 0, {}), Error);
}

TEST_CASE("diameter and dist_to_set are monotone under enlargement") {
  auto s = oracle::random_metric_space(6, 77);
  std::vector<int> small{1, 3};
  std::vector<int> big{0, 1, 3, 5};
  CHECK(diameter(subspace(s, small)) <= diameter(subspace(s, big)));
  for (int x = 0; x < s->size(); ++x) {
    CHECK(dist_to_set(*s, x, big) <= dist_to_set(*s, x, small));
  }
}

TEST_CASE("is_isometric_map") {
  auto p = pair_space(Rational(1));
  auto far = pair_space(Rational(2));
  CHECK(is_isometric_map(*p, *p, {{"a", "a"}, {"b", "b"}}));
  CHECK(is_isometric_map(*p, *p, {{"a", "b"}, {"b", "a"}}));
  CHECK(!is_isometric_map(*p, *far, {{"a", "a"}, {"b", "b"}}));
  CHECK(!is_isometric_map(*p, *p, {{"a", "a"}, {"b", "a"}}));
  CHECK_THROWS_AS(is_isometric_map(*p, *p, {{"zzz", "a"}}), Error);
}

TEST_CASE("induced subspace inherits the metric") {
  auto s = path3();
  auto sub = induced_subspace(subspace(s, {0, 2}));
  CHECK(sub->size() == 2);
  CHECK(sub->dist(0, 1) == 2);
}
