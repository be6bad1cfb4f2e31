#include <doctest.h>

#include "fixtures.hpp"
#include "urykat/approximant.hpp"
#include "urykat/isometry.hpp"
#include "urykat/oracle.hpp"

using namespace urykat;
using namespace urykat::testing;

TEST_CASE("full group sizes on the worked examples") {
  CHECK(IsometryGroup::full(singleton())->order() == 1);
  CHECK(IsometryGroup::full(equilateral3())->order() == 6);
  CHECK(IsometryGroup::full(path3())->order() == 2);
  CHECK(IsometryGroup::full(l1_square())->order() == 8);
}

TEST_CASE("path group is the identity and the endpoint swap") {
  GroupPtr g = IsometryGroup::full(path3());
  REQUIRE(g->order() == 2);
  CHECK(g->cycle_notation(g->identity()) == "()");
  int other = 1 - g->identity();
  CHECK(g->cycle_notation(other) == "(a c)");
  CHECK(g->inverse(other) == other);
  CHECK(g->compose(other, other) == g->identity());
}

TEST_CASE("pruned search equals the unpruned filter on random spaces") {
  for (std::uint64_t seed : {11ULL, 22ULL, 33ULL, 44ULL}) {
    auto space = oracle::random_metric_space(6, seed);
    GroupPtr pruned = IsometryGroup::full(space);
    auto brute = oracle::isometries_by_filter(*space);
    REQUIRE(pruned->order() == static_cast<int>(brute.size()));
    for (int e = 0; e < pruned->order(); ++e) {
      CHECK(pruned->element(e).img == brute[static_cast<std::size_t>(e)].img);
    }
  }
}

TEST_CASE("search budget is enforced") {
  auto big = equilateral3(Rational(1));
  CHECK_THROWS_AS(IsometryGroup::full(big, 2), Error);
}

TEST_CASE("subgroup construction validates closure and membership") {
  auto square = l1_square();
  GroupPtr full = IsometryGroup::full(square);
  // The rotation subgroup of the square, cyclic of order 4.
  std::vector<Isometry> rotation;
  rotation.push_back(Isometry{{0, 1, 2, 3}});
  rotation.push_back(Isometry{{1, 3, 0, 2}});
  rotation.push_back(Isometry{{3, 2, 1, 0}});
  rotation.push_back(Isometry{{2, 0, 3, 1}});
  GroupPtr cyclic = IsometryGroup::from_elements(square, rotation);
  CHECK(cyclic->order() == 4);
  // Dropping one rotation breaks closure.
  rotation.pop_back();
  CHECK_THROWS_AS(IsometryGroup::from_elements(square, rotation), Error);
  // A non-isometry is rejected.
  CHECK_THROWS_AS(IsometryGroup::from_elements(
                      square, std::vector<Isometry>{Isometry{{0, 1, 2, 3}}, Isometry{{1, 0, 2, 3}}}),
                  Error);
}

TEST_CASE("cycle notation round-trips") {
  auto s = l1_square();
  GroupPtr g = IsometryGroup::full(s);
  for (int e = 0; e < g->order(); ++e) {
    CHECK(g->parse_cycles(g->cycle_notation(e)) == e);
  }
  CHECK_THROWS_AS(g->parse_cycles("(s0 s1)"), Error);  // not an isometry of the square
}

TEST_CASE("back-and-forth on the equilateral triple") {
  auto s = equilateral3();
  PartialIsometry start = partial_isometry(s, {{0, 1}});
  BackAndForthResult r = extend_partial_isometry(start, 3);
  REQUIRE(r.success);
  CHECK(r.extension.pairs.size() == 3);
  CHECK(partial_isometry_valid(*s, r.extension.pairs));
}

TEST_CASE("back-and-forth failure reports the missing profile") {
  auto s = path3();
  PartialIsometry start = partial_isometry(s, {{0, 1}});  // a -> b cannot extend
  BackAndForthResult r = extend_partial_isometry(start, 3);
  REQUIRE(!r.success);
  CHECK(!r.missing_anchor.empty());
  CHECK(!r.missing_profile.empty());
  // The reported profile really is unrealized.
  CHECK(find_realizing_point(*s, r.missing_anchor, r.missing_profile) < 0);
}

TEST_CASE("identity partial map extends to the identity") {
  auto s = path3();
  PartialIsometry start = partial_isometry(s, {{0, 0}});
  BackAndForthResult r = extend_partial_isometry(start, 3);
  REQUIRE(r.success);
  for (const auto& [from, to] : r.extension.pairs) CHECK(from == to);
}

TEST_CASE("certified approximants extend small partial isometries both ways") {
  Grid grid = make_grid(1, 1);
  Approximant a = build_approximant(equilateral3(), 2, 0, grid, 4096);
  REQUIRE(a.witness_k == 2);
  const int n = a.space->size();
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      // Certification at k = 2 realizes every step profile over at most two
      // anchors, so the alternation runs to a total matching.
      PartialIsometry start = partial_isometry(a.space, {{s, t}});
      BackAndForthResult r = extend_partial_isometry(start, n);
      CHECK(r.success);
      CHECK(r.extension.pairs.size() == static_cast<std::size_t>(n));
    }
  }
}

TEST_CASE("nbhd worked examples") {
  GroupPtr g = IsometryGroup::full(path3());
  NbhdSet tight = nbhd(g, {{0, Rational(1)}});
  CHECK(tight.members == ElementSet{g->identity()});
  NbhdSet everything = nbhd(g, {{0, Rational(3)}});
  CHECK(everything.members.size() == 2);
  NbhdSet fixed_point = nbhd(g, {{1, rat(1, 2)}});  // both elements fix b
  CHECK(fixed_point.members.size() == 2);
}

TEST_CASE("nbhd is monotone in eps and inverse-closed") {
  GroupPtr g = IsometryGroup::full(l1_square());
  NbhdSet small = nbhd(g, {{0, Rational(1)}});
  NbhdSet large = nbhd(g, {{0, Rational(2)}});
  CHECK(is_subset(small.members, large.members));
  CHECK(is_symmetric_set(*g, small.members));
  CHECK(is_symmetric_set(*g, large.members));
}

TEST_CASE("set algebra") {
  GroupPtr g = IsometryGroup::full(path3());
  const int id = g->identity();
  const int swap = 1 - id;
  ElementSet a{swap};
  CHECK(product(*g, singleton_set(id), a) == a);
  ElementSet aa_inv = product(*g, a, inverse_set(*g, a));
  CHECK(std::binary_search(aa_inv.begin(), aa_inv.end(), id));
  ElementSet v{id};
  CHECK(disjoint(product(*g, singleton_set(swap), v), product(*g, singleton_set(id), v)));
  CHECK(power(*g, ElementSet{id, swap}, 2).size() == 2);
  CHECK(is_subset(ElementSet{id}, ElementSet{id, swap}));
  CHECK(!is_subset(ElementSet{id, swap}, ElementSet{id}));
}

TEST_CASE("group extension past an added point keeps profile preservers only") {
  // Grow the path space by a point at distance (9/4, 13/4, 5/2): only the
  // identity preserves that profile.
  Grid grid = make_grid(4, 4);
  Approximant a{path3(), grid, 0, {}};
  RealizedPoint grown =
      extension_with_realized_point(a, {0, 1, 2}, {rat(9, 4), rat(13, 4), rat(5, 2)});
  REQUIRE(grown.added);
  GroupPtr base = IsometryGroup::full(path3());
  GroupExtension ext = extend_group_to_grown_space(base, grown.approximant.space);
  CHECK(ext.extended->order() == 1);
  CHECK(ext.dropped.size() == 1);
  CHECK(base->cycle_notation(ext.dropped.front()) == "(a c)");
}
