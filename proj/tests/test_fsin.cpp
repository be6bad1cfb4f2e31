#include <doctest.h>

#include "fixtures.hpp"
#include "urykat/approximant.hpp"
#include "urykat/fsin.hpp"

using namespace urykat;
using namespace urykat::testing;

namespace {

GroupPtr path_group() { return IsometryGroup::full(path3()); }

}  // namespace

TEST_CASE("left uniform discreteness verdicts") {
  GroupPtr g = path_group();
  const int id = g->identity();
  const int swap = 1 - id;
  NbhdSet tight = nbhd(g, {{0, Rational(1)}});  // {id}
  NbhdSet everything = nbhd(g, {{0, Rational(3)}});

  CHECK(is_left_uniformly_discrete(*g, singleton_set(swap), everything).discrete);
  CHECK(is_left_uniformly_discrete(*g, full_set(*g), tight).discrete);
  auto verdict = is_left_uniformly_discrete(*g, full_set(*g), everything);
  CHECK(!verdict.discrete);
  CHECK(verdict.witness_a == std::min(id, swap));
  CHECK(verdict.witness_b == std::max(id, swap));
}

TEST_CASE("basis generation dedupes and keeps id and the whole group") {
  GroupPtr g = path_group();
  UniformityBasis basis = generate_basis(g, make_grid(2, 2), 2);
  REQUIRE(!basis.sets.empty());
  CHECK(basis.sets.front().members.size() == 2);           // the whole group first
  CHECK(basis.sets.back().members == ElementSet{g->identity()});
  for (std::size_t i = 1; i < basis.sets.size(); ++i) {
    CHECK(basis.sets[i - 1].members.size() >= basis.sets[i].members.size());
    CHECK(basis.sets[i].members != basis.sets[i - 1].members);
  }
}

TEST_CASE("neutrality always finds a witness in a finite group") {
  GroupPtr g = path_group();
  UniformityBasis basis = generate_basis(g, make_grid(2, 2), 2);
  NbhdSet v = nbhd(g, {{0, Rational(1)}});
  NeutralityResult whole = neutrality_check(*g, full_set(*g), v, basis);
  REQUIRE(whole.found);
  CHECK(!whole.u->members.empty());
  NeutralityResult wide = neutrality_check(*g, singleton_set(g->identity()),
                                           nbhd(g, {{0, Rational(3)}}), basis);
  REQUIRE(wide.found);
  CHECK(wide.u->members.size() == 2);  // the whole group works and is tried first
}

TEST_CASE("abelian groups take U = V for every V") {
  // The rotation subgroup of the square is cyclic of order 4.
  auto square = l1_square();
  GroupPtr cyclic = IsometryGroup::from_elements(
      square, {Isometry{{0, 1, 2, 3}}, Isometry{{1, 3, 0, 2}}, Isometry{{3, 2, 1, 0}},
               Isometry{{2, 0, 3, 1}}});
  UniformityBasis basis = generate_basis(cyclic, make_grid(2, 2), 2);
  for (const auto& v : basis.sets) {
    for (const auto& a : {singleton_set(1), full_set(*cyclic), ElementSet{0, 2}}) {
      CHECK(is_subset(product(*cyclic, v.members, a), product(*cyclic, a, v.members)));
    }
  }
}

TEST_CASE("degenerate basis inputs raise the named errors") {
  GroupPtr g = IsometryGroup::full(l1_square());
  UniformityBasis empty{g, {}};
  CHECK_THROWS_AS(neutrality_check(*g, full_set(*g), nbhd(g, {{0, Rational(3)}}), empty), Error);
  // A basis holding only the whole group has no W with W^4 inside a proper V.
  UniformityBasis whole_only{g, {nbhd(g, {{0, Rational(3)}})}};
  NbhdSet proper = nbhd(g, {{0, Rational(1)}});
  REQUIRE(proper.members.size() < static_cast<std::size_t>(g->order()));
  CHECK_THROWS_AS(reduction_case(*g, whole_only, full_set(*g), proper), Error);
}

TEST_CASE("reduction chain on trivial and vacuous cases") {
  GroupPtr g = path_group();
  UniformityBasis basis = generate_basis(g, make_grid(2, 2), 2);
  NbhdSet whole = nbhd(g, {{0, Rational(3)}});
  ReductionCase trivial = reduction_case(*g, basis, full_set(*g), whole);
  CHECK(trivial.passed);
  ReductionCase vacuous = reduction_case(*g, basis, {}, whole);
  CHECK(vacuous.passed);
  CHECK(vacuous.maximal_b.empty());
}

TEST_CASE("reduction chain across every basis element of the square group") {
  GroupPtr g = IsometryGroup::full(l1_square());
  UniformityBasis basis = generate_basis(g, make_grid(2, 2), 2);
  std::vector<ElementSet> subsets{{}, singleton_set(g->identity()), full_set(*g), {0, 3}};
  ReductionReport report = discrete_reduction_check(*g, basis, subsets);
  CHECK(report.passed);
  CHECK(report.cases == static_cast<long>(subsets.size() * basis.sets.size()));
}

TEST_CASE("theorem4 construction and verification on a hand-built approximant") {
  // Path space plus a sphere point at distance exactly eps = 1/3 from a.
  Grid grid = make_grid(9, 4);
  Approximant base{path3(), grid, 0, {}};
  RealizedPoint sphere = extension_with_realized_point(base, {0}, {rat(1, 3)}, "u");
  REQUIRE(sphere.added);
  Approximant a = sphere.approximant;
  GroupPtr g = IsometryGroup::full(a.space);
  CHECK(g->order() == 1);  // the sphere point breaks the path symmetry

  Theorem4Instance inst =
      theorem4_construct(a, g, singleton_set(g->identity()), 0, rat(1, 3));
  // D exceeds max(diam(Ax), 4 eps) = 4/3 by one grid step.
  CHECK(inst.big_d == rat(4, 3) + rat(1, 9));
  // The sphere point makes d(F, ax) = eps exactly, so f(ax) = D - eps.
  CHECK(inst.dist_f_to_ax == std::vector<Rational>{rat(1, 3)});
  CHECK(inst.f_values[0] == inst.big_d - rat(1, 3));
  // Away from the thickening the profile is constant D.
  for (int p : inst.complement) CHECK(inst.f_values[static_cast<std::size_t>(p)] == inst.big_d);

  Theorem4Report report = verify_theorem4(inst);
  CHECK(report.passed);
  CHECK(report.pairs_checked >= 1);
}

TEST_CASE("theorem4 on the grown triangle exercises a nontrivial W") {
  Grid grid = make_grid(3, 2);
  Approximant a = build_approximant(equilateral3(Rational(2)), 1, 1, grid, 4096);
  REQUIRE(a.witness_k >= 1);
  GroupPtr g = IsometryGroup::full(a.space);
  REQUIRE(g->order() == 6);

  Theorem4Instance inst = theorem4_construct(a, g, singleton_set(g->identity()), 0, Rational(1));
  Theorem4Report report = verify_theorem4(inst);
  CHECK(report.passed);
  CHECK(inst.w_members.size() >= 1);

  // Corrupting the radius after construction must fail with a step witness.
  Theorem4Report corrupted = verify_theorem4(with_inflated_eps(inst, inst.big_d));
  CHECK(!corrupted.passed);
  CHECK(corrupted.first_failed_step == "f_ax_upper_bound");

  // Corrupting the realized profile must fail at the realization step.
  Theorem4Instance tampered = inst;
  tampered.f_values[static_cast<std::size_t>(tampered.orbit.front())] += grid_step(grid);
  Theorem4Report tampered_report = verify_theorem4(tampered);
  CHECK(!tampered_report.passed);
  CHECK(tampered_report.first_failed_step == "realization");
}

TEST_CASE("theorem4 rejects non-discrete data and off-grid radii") {
  Grid grid = make_grid(3, 2);
  Approximant a{equilateral3(Rational(2)), grid, 0, {}};
  GroupPtr g = IsometryGroup::full(a.space);
  // With eps = 1, V = V[a;2] is all of G, so distinct elements cannot separate.
  CHECK_THROWS_AS(theorem4_construct(a, g, full_set(*g), 0, Rational(1)), Error);
  // eps/3 must live on the grid.
  CHECK_THROWS_AS(theorem4_construct(a, g, singleton_set(g->identity()), 0, rat(1, 3)), Error);
  // q must be divisible by 3.
  Approximant coarse{equilateral3(Rational(2)), make_grid(2, 2), 0, {}};
  GroupPtr g2 = IsometryGroup::full(coarse.space);
  CHECK_THROWS_AS(theorem4_construct(coarse, g2, singleton_set(g2->identity()), 0, Rational(1)),
                  Error);
}

TEST_CASE("displacement bound: identity, tight swap, and premise failure") {
  GroupPtr pairg = IsometryGroup::full(pair_space(Rational(2)));
  Grid grid = make_grid(2, 2);

  DisplacementReport only_id = displacement_bound_check(
      *pairg, singleton_set(pairg->identity()), rat(1, 2), grid, 0);
  CHECK(only_id.passed);
  CHECK(!only_id.bound_attained);  // the identity never moves anything

  ElementSet everyone = max_displacement_set(*pairg, Rational(2));
  CHECK(everyone.size() == 2);
  DisplacementReport tight = displacement_bound_check(*pairg, everyone, Rational(2), grid, 0);
  CHECK(tight.passed);
  CHECK(tight.bound_attained);  // kuratowski(a) = (0,2) shifts to (2,0)

  CHECK_THROWS_AS(displacement_bound_check(*pairg, everyone, Rational(1), grid, 0), Error);
}

TEST_CASE("displacement bound holds for sampled profiles on a grown space") {
  Grid grid = make_grid(3, 2);
  Approximant a = build_approximant(equilateral3(Rational(2)), 1, 1, grid, 4096);
  GroupPtr g = IsometryGroup::full(a.space);
  ElementSet v = max_displacement_set(*g, Rational(2));
  CHECK(v.size() == static_cast<std::size_t>(g->order()));
  DisplacementReport report = displacement_bound_check(*g, v, Rational(2), grid, 200, 42);
  CHECK(report.passed);
  CHECK(report.functions_checked == 200);
}
