#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "urykat/approximant.hpp"
#include "urykat/io.hpp"

using namespace urykat;
using namespace urykat::testing;

TEST_CASE("extend_once on a singleton realizes every unrealized value") {
  Approximant seed{singleton(), make_grid(1, 2), 0, {}};
  Approximant grown = extend_once(seed, 1, 4096);
  REQUIRE(grown.space->size() == 3);
  std::multiset<Rational> distances{grown.space->dist(0, 1), grown.space->dist(0, 2)};
  CHECK(distances == std::multiset<Rational>{rat(1), rat(2)});
  // The second pass realizes the one profile the first pass left open: the
  // point at distance 1 from the seed still has no neighbour at distance 2.
  Approximant again = extend_once(grown, 1, 4096);
  CHECK(again.space->size() == 4);
  bool equidistant = true;
  for (int i = 0; i < 3; ++i) equidistant = equidistant && again.space->dist(3, i) == 2;
  CHECK(equidistant);
}

TEST_CASE("extend_once adds the midpoint of a 2-point space") {
  Approximant seed{pair_space(Rational(2)), make_grid(1, 2), 0, {}};
  Approximant grown = extend_once(seed, 2, 4096);
  bool midpoint = false;
  for (int p = 2; p < grown.space->size(); ++p) {
    midpoint = midpoint || (grown.space->dist(p, 0) == 1 && grown.space->dist(p, 1) == 1);
  }
  CHECK(midpoint);
  // The old space embeds isometrically.
  CHECK(grown.space->dist(0, 1) == 2);
}

TEST_CASE("extend_once rejects a seed beyond the cap and honors the size budget") {
  Approximant wide{pair_space(Rational(3)), make_grid(1, 2), 0, {}};
  CHECK_THROWS_AS(extend_once(wide, 1, 4096), Error);
  Approximant seed{singleton(), make_grid(1, 2), 0, {}};
  CHECK_THROWS_AS(extend_once(seed, 1, 2), Error);
}

TEST_CASE("check_one_point_property") {
  Grid grid = make_grid(1, 2);
  CHECK(check_one_point_property(*pair_space(Rational(2)), 0, grid).certified);

  auto verdict = check_one_point_property(*pair_space(Rational(2)), 1, grid);
  CHECK(!verdict.certified);
  REQUIRE(verdict.missing.has_value());
  CHECK(verdict.missing->subset == std::vector<int>{0});
  CHECK(verdict.missing->values == std::vector<Rational>{rat(1)});
}

TEST_CASE("build_approximant with zero rounds only certifies the seed") {
  Grid grid = make_grid(1, 1);
  Approximant a = build_approximant(equilateral3(), 2, 0, grid, 4096);
  CHECK(a.space->size() == 3);
  CHECK(a.witness_k == 2);  // every profile on <=2 points of the unit triangle is realized
}

TEST_CASE("build_approximant from a singleton, one round") {
  Grid grid = make_grid(1, 2);
  Approximant a = build_approximant(singleton(), 1, 1, grid, 4096);
  CHECK(a.space->size() == 3);
  // One round realizes every profile over the seed, but the added points
  // still miss neighbours of their own, so no certificate yet.
  CHECK(a.witness_k == 0);
  CHECK(a.provenance.size() == 2);
  for (const auto& rec : a.provenance) {
    CHECK(rec.round == 1);
    CHECK(rec.controllers == std::vector<std::string>{"x"});
  }
}

TEST_CASE("iterating to the fixed point certifies the one-point property") {
  Grid grid = make_grid(1, 2);
  Approximant a = build_approximant(singleton(), 1, 3, grid, 4096);
  CHECK(a.space->size() == 5);
  CHECK(a.witness_k == 1);
  // A space realizing every profile is a fixed point of the growth.
  Approximant again = extend_once(a, 1, 4096);
  CHECK(again.space->size() == a.space->size());
  CHECK(again.space->same_geometry(*a.space));
}

TEST_CASE("two rounds at k=2 certify the one-point property") {
  Grid grid = make_grid(1, 2);
  Approximant a = build_approximant(singleton(), 2, 2, grid, 4096);
  CHECK(a.witness_k >= 1);
  auto shuffled = check_one_point_property_shuffled(*a.space, a.witness_k, grid, 99);
  CHECK(shuffled.certified);
}

TEST_CASE("shuffled and canonical checks agree on failures too") {
  Grid grid = make_grid(1, 2);
  auto canonical = check_one_point_property(*path3(), 2, grid);
  auto shuffled = check_one_point_property_shuffled(*path3(), 2, grid, 7);
  CHECK(canonical.certified == shuffled.certified);
  if (!canonical.certified) {
    // Whatever counterexample the shuffled order found must be genuine.
    REQUIRE(shuffled.missing.has_value());
    CHECK(find_realizing_point(*path3(), shuffled.missing->subset, shuffled.missing->values) < 0);
  }
}

TEST_CASE("growth is deterministic") {
  Grid grid = make_grid(2, 2);
  Approximant a = build_approximant(singleton(), 2, 1, grid, 4096);
  Approximant b = build_approximant(singleton(), 2, 1, grid, 4096);
  CHECK(a.space->same_geometry(*b.space));
  CHECK(approximant_to_json(a).dump() == approximant_to_json(b).dump());
}

TEST_CASE("parallel growth matches the serial result") {
  Grid grid = make_grid(2, 2);
  Approximant serial = build_approximant(singleton(), 2, 2, grid, 4096, 1);
  Approximant parallel = build_approximant(singleton(), 2, 2, grid, 4096, 3);
  CHECK(serial.space->same_geometry(*parallel.space));
}

TEST_CASE("every grown point keeps the old space isometric") {
  Grid grid = make_grid(2, 1);
  Approximant seed{pair_space(Rational(1)), grid, 0, {}};
  Approximant grown = extend_once(seed, 2, 4096);
  for (int i = 0; i < seed.space->size(); ++i) {
    CHECK(grown.space->point_id(i) == seed.space->point_id(i));
    for (int j = 0; j < seed.space->size(); ++j) {
      CHECK(grown.space->dist(i, j) == seed.space->dist(i, j));
    }
  }
  CHECK(grown.space->size() > seed.space->size());
}

TEST_CASE("extension_with_realized_point") {
  Grid grid = make_grid(1, 2);
  Approximant a{path3(), grid, 0, {}};

  // Already realized: d(c, a) = 2, d(c, b) = 1.
  RealizedPoint hit = extension_with_realized_point(a, {0, 1}, {rat(2), rat(1)});
  CHECK(!hit.added);
  CHECK(hit.point == 2);
  CHECK(hit.approximant.space->size() == 3);

  // Fresh: the profile (2,1) over {a, c} forces distance 2 at b.
  RealizedPoint fresh = extension_with_realized_point(a, {0, 2}, {rat(2), rat(1)});
  CHECK(fresh.added);
  const auto& s = *fresh.approximant.space;
  CHECK(s.size() == 4);
  CHECK(s.dist(fresh.point, 0) == 2);
  CHECK(s.dist(fresh.point, 1) == 2);
  CHECK(s.dist(fresh.point, 2) == 1);
  CHECK(fresh.approximant.provenance.back().round == -1);

  // Values beyond the cap are allowed; off-step values are not.
  RealizedPoint far = extension_with_realized_point(a, {0}, {rat(5)});
  CHECK(far.added);
  CHECK(far.approximant.space->dist(far.point, 0) == 5);
  CHECK_THROWS_AS(extension_with_realized_point(a, {0}, {rat(1, 3)}), Error);
}

TEST_CASE("singleton realization example") {
  Grid grid = make_grid(1, 2);
  Approximant a{singleton(), grid, 0, {}};
  RealizedPoint r = extension_with_realized_point(a, {0}, {rat(2)});
  CHECK(r.added);
  CHECK(r.approximant.space->dist(0, r.point) == 2);
}

TEST_CASE("approximant JSON round-trip") {
  Grid grid = make_grid(2, 2);
  Approximant a = build_approximant(singleton(), 2, 1, grid, 4096);
  Json j = approximant_to_json(a);
  Approximant back = approximant_from_json(j);
  CHECK(back.space->same_geometry(*a.space));
  CHECK(back.witness_k == a.witness_k);
  CHECK(back.provenance.size() == a.provenance.size());
}
