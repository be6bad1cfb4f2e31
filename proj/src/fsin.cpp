#include "urykat/fsin.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace urykat {

namespace {

Rational min_positive_distance(const MetricSpace& space) {
  Rational best = -1;
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      const Rational& d = space.dist(i, j);
      if (d > 0 && (best < 0 || d < best)) best = d;
    }
  }
  return best;  // -1 for a singleton space
}

}  // namespace

UniformityBasis generate_basis(GroupPtr group, const Grid& grid, int max_anchors) {
  const MetricSpace& space = *group->space();
  std::vector<NbhdSet> raw;
  // The whole group, as a radius beyond the diameter.
  raw.push_back(nbhd(group, {{0, space.diameter_all() + 1}}));
  // {id}: a radius below every positive displacement pins every point.
  Rational minpos = min_positive_distance(space);
  if (minpos > 0) raw.push_back(nbhd(group, {{0, minpos}}));

  auto ladder = grid_ladder(grid);
  for (int p = 0; p < space.size(); ++p) {
    for (const auto& eps : ladder) {
      if (eps <= 0) continue;
      raw.push_back(nbhd(group, {{p, eps}}));
    }
  }
  if (max_anchors >= 2) {
    for (int p = 0; p < space.size(); ++p) {
      for (int r = p + 1; r < space.size(); ++r) {
        for (const auto& eps : ladder) {
          if (eps <= 0) continue;
          raw.push_back(nbhd(group, {{p, eps}, {r, eps}}));
        }
      }
    }
  }
  // Deduplicate by membership; keep the first anchor description.
  std::map<ElementSet, NbhdSet> unique;
  for (auto& set : raw) {
    unique.try_emplace(set.members, std::move(set));
  }
  UniformityBasis basis;
  basis.group = std::move(group);
  for (auto& [members, set] : unique) basis.sets.push_back(std::move(set));
  std::stable_sort(basis.sets.begin(), basis.sets.end(),
                   [](const NbhdSet& a, const NbhdSet& b) {
                     if (a.members.size() != b.members.size()) {
                       return a.members.size() > b.members.size();
                     }
                     return a.members < b.members;
                   });
  return basis;
}

DiscretenessVerdict is_left_uniformly_discrete(const IsometryGroup& group,
                                               const ElementSet& subset, const NbhdSet& v) {
  std::vector<ElementSet> cosets;
  cosets.reserve(subset.size());
  for (int a : subset) cosets.push_back(product(group, singleton_set(a), v.members));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (!disjoint(cosets[i], cosets[j])) {
        return DiscretenessVerdict{false, subset[i], subset[j]};
      }
    }
  }
  return DiscretenessVerdict{};
}

NeutralityResult neutrality_check(const IsometryGroup& group, const ElementSet& subset,
                                  const NbhdSet& v, const UniformityBasis& basis) {
  if (basis.sets.empty()) fail(Errc::empty_basis, "no candidate neighbourhoods");
  NeutralityResult result;
  const ElementSet target = product(group, subset, v.members);
  for (std::size_t b = 0; b < basis.sets.size(); ++b) {
    const ElementSet attempt = product(group, basis.sets[b].members, subset);
    if (is_subset(attempt, target)) {
      result.found = true;
      result.u = basis.sets[b];
      return result;
    }
    bool witnessed = false;
    for (int u : basis.sets[b].members) {
      for (int a : subset) {
        const int ua = group.compose(u, a);
        if (!std::binary_search(target.begin(), target.end(), ua)) {
          result.witnesses.emplace_back(static_cast<int>(b), u, a);
          witnessed = true;
          break;
        }
      }
      if (witnessed) break;
    }
  }
  return result;
}

ReductionCase reduction_case(const IsometryGroup& group, const UniformityBasis& basis,
                             const ElementSet& subset, const NbhdSet& v) {
  ReductionCase out;
  int w_index = -1;
  for (std::size_t b = 0; b < basis.sets.size(); ++b) {
    if (!is_symmetric_set(group, basis.sets[b].members)) continue;
    if (is_subset(power(group, basis.sets[b].members, 4), v.members)) {
      w_index = static_cast<int>(b);
      break;  // sets are sorted largest first
    }
  }
  if (w_index < 0) {
    fail(Errc::no_small_enough_w, "basis lacks W with W^4 inside V");
  }
  out.basis_w = w_index;
  const ElementSet& w = basis.sets[static_cast<std::size_t>(w_index)].members;

  const ElementSet aw = product(group, subset, w);
  ElementSet b_set;
  std::vector<ElementSet> chosen_cosets;
  for (int candidate : aw) {
    ElementSet coset = product(group, singleton_set(candidate), w);
    bool clear = true;
    for (const auto& other : chosen_cosets) {
      if (!disjoint(coset, other)) {
        clear = false;
        break;
      }
    }
    if (clear) {
      b_set.push_back(candidate);
      chosen_cosets.push_back(std::move(coset));
    }
  }
  std::sort(b_set.begin(), b_set.end());
  out.maximal_b = b_set;

  const ElementSet w2 = power(group, w, 2);
  const ElementSet w3 = power(group, w, 3);
  const ElementSet w4 = power(group, w, 4);
  if (!is_subset(subset, product(group, b_set, w2)) && !subset.empty()) {
    out.failures.push_back("A is not covered by B W^2");
  }
  auto verdict = is_left_uniformly_discrete(group, b_set, basis.sets[static_cast<std::size_t>(w_index)]);
  if (!verdict.discrete) {
    out.failures.push_back("maximal B is not uniformly discrete at W");
  }
  NeutralityResult neutrality =
      neutrality_check(group, b_set, basis.sets[static_cast<std::size_t>(w_index)], basis);
  if (!neutrality.found) {
    out.failures.push_back("no neutrality witness U for (B, W)");
    out.passed = false;
    return out;
  }
  const ElementSet& u = neutrality.u->members;
  if (!is_subset(product(group, u, b_set), product(group, b_set, w))) {
    out.failures.push_back("U B is not inside B W");
  }

  const ElementSet ua = product(group, u, subset);
  const ElementSet ubw2 = product(group, product(group, u, b_set), w2);
  const ElementSet bw3 = product(group, b_set, w3);
  const ElementSet aw4 = product(group, subset, w4);
  const ElementSet av = product(group, subset, v.members);
  if (!is_subset(ua, ubw2)) out.failures.push_back("U A escapes U B W^2");
  if (!is_subset(ubw2, bw3)) out.failures.push_back("U B W^2 escapes B W^3");
  if (!is_subset(bw3, aw4)) out.failures.push_back("B W^3 escapes A W^4");
  if (!is_subset(aw4, av)) out.failures.push_back("A W^4 escapes A V");
  out.passed = out.failures.empty();
  return out;
}

ReductionReport discrete_reduction_check(const IsometryGroup& group,
                                         const UniformityBasis& basis,
                                         const std::vector<ElementSet>& subsets) {
  ReductionReport report;
  for (const auto& subset : subsets) {
    for (std::size_t b = 0; b < basis.sets.size(); ++b) {
      ReductionCase c = reduction_case(group, basis, subset, basis.sets[b]);
      ++report.cases;
      if (!c.passed) {
        for (const auto& f : c.failures) {
          report.failures.push_back("basis " + std::to_string(b) + ": " + f);
        }
      }
    }
  }
  report.passed = report.failures.empty();
  return report;
}

Theorem4Instance theorem4_construct(const Approximant& approximant, GroupPtr group,
                                    const ElementSet& subset, int x, const Rational& eps) {
  const MetricSpace& space = *approximant.space;
  if (!group->space()->same_geometry(space)) {
    fail(Errc::group_mismatch, "group does not act on the approximant's space");
  }
  if (x < 0 || x >= space.size()) fail(Errc::unknown_point, "anchor index");
  if (subset.empty()) fail(Errc::empty_subset, "A must be nonempty");
  if (eps <= 0) fail(Errc::usage_error, "eps must be positive");
  if (approximant.grid.q % 3 != 0) {
    fail(Errc::grid_overflow, "eps/3 needs a granularity divisible by 3");
  }
  if (!is_multiple_of_step(eps, approximant.grid.q) ||
      !is_multiple_of_step(eps / 3, approximant.grid.q)) {
    fail(Errc::grid_overflow,
         "eps " + format_rational(eps) + " or eps/3 is off the 1/" +
             std::to_string(approximant.grid.q) + " step");
  }

  Theorem4Instance inst;
  inst.base_group = group;
  inst.a_set = subset;
  inst.x = x;
  inst.eps = eps;
  inst.v = nbhd(group, {{x, 2 * eps}});

  // Separation of A: a V^2 and b V^2 pairwise disjoint.
  const ElementSet v2 = power(*group, inst.v.members, 2);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      ElementSet ci = product(*group, singleton_set(subset[i]), v2);
      ElementSet cj = product(*group, singleton_set(subset[j]), v2);
      if (!disjoint(ci, cj)) {
        fail(Errc::not_uniformly_discrete,
             "a=" + group->cycle_notation(subset[i]) + " b=" + group->cycle_notation(subset[j]));
      }
    }
  }

  inst.ax_points.reserve(subset.size());
  for (int a : subset) inst.ax_points.push_back(group->apply(a, x));

  // Open eps-thickening of Ax and its complement F.
  std::vector<bool> near(static_cast<std::size_t>(space.size()), false);
  for (int p = 0; p < space.size(); ++p) {
    for (int ax : inst.ax_points) {
      if (space.dist(p, ax) < eps) {
        near[static_cast<std::size_t>(p)] = true;
        break;
      }
    }
  }
  for (int p = 0; p < space.size(); ++p) {
    if (!near[static_cast<std::size_t>(p)]) inst.complement.push_back(p);
  }
  if (inst.complement.empty()) {
    fail(Errc::empty_complement, "the eps-thickening of Ax swallows the whole space");
  }

  // Disjointness of the eps-balls around Ax, replaying the contrapositive.
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      for (int p = 0; p < space.size(); ++p) {
        if (space.dist(p, inst.ax_points[i]) < eps && space.dist(p, inst.ax_points[j]) < eps) {
          const Rational gap = space.dist(inst.ax_points[i], inst.ax_points[j]);
          const int quotient = group->compose(group->inverse(subset[j]), subset[i]);
          fail(Errc::containment_failure,
               "balls intersect at " + space.point_id(p) + "; d(ax,bx)=" +
                   format_rational(gap) + " puts " + group->cycle_notation(quotient) +
                   " inside V despite the separation");
        }
      }
    }
  }

  Rational bound = diameter(subspace(approximant.space, inst.ax_points));
  if (4 * eps > bound) bound = 4 * eps;
  inst.big_d = bound + grid_step(approximant.grid);

  inst.f_values.reserve(static_cast<std::size_t>(space.size()));
  Rational worst = 0;
  int worst_point = -1;
  for (int p = 0; p < space.size(); ++p) {
    Rational away = dist_to_set(space, p, inst.complement);
    if (away > worst) {
      worst = away;
      worst_point = p;
    }
    inst.f_values.push_back(inst.big_d - away);
  }
  if (worst > 2 * eps) {
    fail(Errc::construction_failed,
         "lower bound fails: d(F, " + space.point_id(worst_point) + ") = " +
             format_rational(worst) + " exceeds 2 eps");
  }
  {
    auto verdict = is_katetov(space, inst.f_values);
    if (!verdict.ok) {
      fail(Errc::construction_failed,
           "profile is not admissible at (" + space.point_id(verdict.i) + "," +
               space.point_id(verdict.j) + ")");
    }
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    Rational away = dist_to_set(space, inst.ax_points[i], inst.complement);
    if (away < eps) {
      fail(Errc::containment_failure, "complement reaches into an eps-ball");
    }
    inst.dist_f_to_ax.push_back(away);
  }

  inst.orbit = group->orbit(x);
  std::vector<Rational> orbit_values;
  orbit_values.reserve(inst.orbit.size());
  for (int p : inst.orbit) orbit_values.push_back(inst.f_values[static_cast<std::size_t>(p)]);
  RealizedPoint realized =
      extension_with_realized_point(approximant, inst.orbit, orbit_values, "z0");
  inst.grown = std::move(realized.approximant);
  inst.z = realized.point;
  inst.z_added = realized.added;

  GroupExtension ext = inst.z_added ? extend_group_to_grown_space(group, inst.grown.space)
                                    : trivial_group_extension(group);
  inst.extended_group = std::move(ext.extended);
  inst.ext_to_base = std::move(ext.ext_to_base);
  inst.dropped = std::move(ext.dropped);

  NbhdSet w = nbhd(inst.extended_group, {{inst.z, eps / 3}});
  inst.w_members = w.members;

  inst.construction_log["D"] = format_rational(inst.big_d);
  inst.construction_log["diam_Ax"] =
      format_rational(diameter(subspace(approximant.space, inst.ax_points)));
  inst.construction_log["complement_size"] = inst.complement.size();
  inst.construction_log["orbit_size"] = inst.orbit.size();
  inst.construction_log["z_added"] = inst.z_added;
  inst.construction_log["dist_F_to_ax"] = format_rationals(inst.dist_f_to_ax);
  return inst;
}

Theorem4Instance with_inflated_eps(Theorem4Instance instance, const Rational& new_eps) {
  instance.eps = new_eps;
  return instance;
}

Theorem4Report verify_theorem4(const Theorem4Instance& inst) {
  Theorem4Report report;
  const MetricSpace& base = *inst.base_group->space();
  const MetricSpace& grown = *inst.grown.space;
  const IsometryGroup& gz = *inst.extended_group;
  const IsometryGroup& g = *inst.base_group;

  auto note = [&](const std::string& step, const std::string& what) {
    if (report.first_failed_step.empty()) report.first_failed_step = step;
    report.failures.push_back(step + ": " + what);
  };

  // The realized point must carry f across the whole orbit of x.
  for (int p : inst.orbit) {
    if (grown.dist(p, inst.z) != inst.f_values[static_cast<std::size_t>(p)]) {
      note("realization", "d(" + base.point_id(p) + ", z) differs from f");
    }
  }

  // Sphere-exact values make the ideal identity f(ax) = D - eps testable.
  for (std::size_t i = 0; i < inst.a_set.size(); ++i) {
    const Rational f_ax = inst.f_values[static_cast<std::size_t>(inst.ax_points[i])];
    if (!(f_ax <= inst.big_d - inst.eps)) {
      note("f_ax_upper_bound", "f(ax) = " + format_rational(f_ax) + " exceeds D - eps for a = " +
                                   g.cycle_notation(inst.a_set[i]));
    }
    if (inst.dist_f_to_ax[i] == inst.eps && f_ax != inst.big_d - inst.eps) {
      note("f_ax_exact", "sphere point exists but f(ax) != D - eps");
    }
  }

  NbhdSet veps = nbhd(inst.base_group, {{inst.x, inst.eps}});
  const ElementSet a_veps = product(g, inst.a_set, veps.members);
  const ElementSet a_v = product(g, inst.a_set, inst.v.members);
  if (!is_subset(a_veps, a_v)) {
    note("veps_inside_v", "A V[x;eps] is not inside A V");
  }

  ElementSet wa;
  for (int w : inst.w_members) {
    const int w_base = inst.ext_to_base[static_cast<std::size_t>(w)];
    const Rational z_move = grown.dist(inst.z, gz.apply(w, inst.z));
    if (!(z_move < inst.eps / 3)) {
      note("w_membership", gz.cycle_notation(w) + " moves z by " + format_rational(z_move));
    }
    for (std::size_t ai = 0; ai < inst.a_set.size(); ++ai) {
      const int a = inst.a_set[ai];
      const int wa_el = g.compose(w_base, a);
      wa.push_back(wa_el);
      const int ax = inst.ax_points[ai];
      const int wax = g.apply(wa_el, inst.x);

      const Rational f_ax = inst.f_values[static_cast<std::size_t>(ax)];
      const Rational f_wax = inst.f_values[static_cast<std::size_t>(wax)];
      // Realization ties f to distances from z on the whole orbit.
      if (grown.dist(ax, inst.z) != f_ax || grown.dist(wax, inst.z) != f_wax) {
        note("realization", "d(., z) differs from f on the orbit for w = " +
                                gz.cycle_notation(w) + ", a = " + g.cycle_notation(a));
        continue;
      }
      // Triangle transfer through z: |f(wax) - f(ax)| <= d(z, wz) < eps/3.
      const Rational lhs = abs_diff(f_wax, f_ax);
      const Rational moved_anchor = grown.dist(wax, gz.apply(w, inst.z));
      if (moved_anchor != grown.dist(ax, inst.z)) {
        note("isometry_transfer", "w does not carry (ax, z) isometrically");
      }
      if (lhs > z_move) {
        note("triangle_transfer", "|f(wax) - f(ax)| exceeds d(z, wz)");
      }
      if (!(lhs < inst.eps)) {
        note("transfer_strict", "|f(wax) - f(ax)| is not below eps");
      }
      if (!(f_wax < inst.big_d)) {
        note("f_wax_below_D", "f(wax) = " + format_rational(f_wax) + " reaches D");
      }
      // f < D forces wax into the thickening; find the ball.
      int host = -1;
      for (std::size_t bi = 0; bi < inst.a_set.size(); ++bi) {
        if (base.dist(wax, inst.ax_points[bi]) < inst.eps) {
          host = static_cast<int>(bi);
          break;
        }
      }
      if (host < 0) {
        note("thickening_membership", "wax is outside every eps-ball for w = " +
                                          gz.cycle_notation(w) + ", a = " + g.cycle_notation(a));
        continue;
      }
      // b^{-1} w a lies in V[x;eps].
      const int b = inst.a_set[static_cast<std::size_t>(host)];
      const int shift = g.compose(g.inverse(b), wa_el);
      if (!(base.dist(g.apply(shift, inst.x), inst.x) < inst.eps)) {
        note("coset_membership", "b^{-1} w a moves x by at least eps");
      }
      ++report.pairs_checked;
    }
  }
  std::sort(wa.begin(), wa.end());
  wa.erase(std::unique(wa.begin(), wa.end()), wa.end());
  if (!is_subset(wa, a_veps)) {
    note("wa_inside_a_veps", "W A escapes A V[x;eps]");
  }
  if (!is_subset(wa, a_v)) {
    note("wa_inside_av", "W A escapes A V");
  }

  report.details["wa_size"] = wa.size();
  report.details["w_size"] = inst.w_members.size();
  report.details["a_veps_size"] = a_veps.size();
  report.passed = report.failures.empty();
  return report;
}

ElementSet max_displacement_set(const IsometryGroup& group, const Rational& eps) {
  ElementSet out;
  const MetricSpace& space = *group.space();
  for (int e = 0; e < group.order(); ++e) {
    bool fits = true;
    for (int p = 0; p < space.size() && fits; ++p) {
      fits = space.dist(p, group.apply(e, p)) <= eps;
    }
    if (fits) out.push_back(e);
  }
  return out;
}

DisplacementReport displacement_bound_check(const IsometryGroup& group, const ElementSet& v_set,
                                            const Rational& eps, const Grid& grid,
                                            int sample_count, std::uint64_t seed) {
  const MetricSpace& space = *group.space();
  for (int v : v_set) {
    for (int p = 0; p < space.size(); ++p) {
      if (space.dist(p, group.apply(v, p)) > eps) {
        fail(Errc::premise_fails,
             "point " + space.point_id(p) + " moves by " +
                 format_rational(space.dist(p, group.apply(v, p))) + " under " +
                 group.cycle_notation(v));
      }
    }
  }

  DisplacementReport report;
  std::vector<int> everything(static_cast<std::size_t>(space.size()));
  for (int i = 0; i < space.size(); ++i) everything[static_cast<std::size_t>(i)] = i;

  auto check_function = [&](const std::vector<Rational>& f) {
    for (int v : v_set) {
      const int vinv = group.inverse(v);
      Rational sup = 0;
      Rational maxdisp = 0;
      for (int p = 0; p < space.size(); ++p) {
        const int pre = group.apply(vinv, p);
        Rational d = abs_diff(f[static_cast<std::size_t>(pre)], f[static_cast<std::size_t>(p)]);
        if (d > sup) sup = d;
        const Rational& moved = space.dist(pre, p);
        if (moved > maxdisp) maxdisp = moved;
      }
      if (sup > maxdisp) {
        report.failures.push_back("sup |vf - f| exceeds the max displacement under " +
                                  group.cycle_notation(v));
      }
      if (sup > eps) {
        report.failures.push_back("sup |vf - f| exceeds eps under " + group.cycle_notation(v));
      }
      if (sup == eps) report.bound_attained = true;
      ++report.pairs_checked;
    }
    ++report.functions_checked;
  };

  if (sample_count <= 0) {
    enumerate_grid_katetov(space, everything, grid, [&](const std::vector<Rational>& f) {
      check_function(f);
      return true;
    });
  } else {
    std::uint64_t state = seed;
    for (int s = 0; s < sample_count; ++s) {
      auto f = sample_grid_katetov(space, everything, grid, state);
      if (f.empty()) break;
      check_function(f);
    }
  }
  report.passed = report.failures.empty();
  return report;
}

}  // namespace urykat
