#include "urykat/lemma_one.hpp"

#include <algorithm>
#include <set>

namespace urykat {

namespace {

Rational min_pairwise_distance(const MetricSpace& space, const std::vector<int>& targets) {
  Rational best = -1;
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      const Rational& d = space.dist(targets[a], targets[b]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

void require_distinct(const std::vector<int>& targets) {
  std::set<int> seen(targets.begin(), targets.end());
  if (seen.size() != targets.size()) fail(Errc::usage_error, "targets must be distinct");
}

}  // namespace

Rational choose_gamma(const MetricSpace& space, const std::vector<int>& targets,
                      const Rational& eps, const Grid& grid) {
  if (targets.empty()) fail(Errc::empty_subset, "no targets");
  require_distinct(targets);
  if (eps <= 0) fail(Errc::usage_error, "eps must be positive");
  Rational diam = 0;
  for (std::size_t a = 0; a < targets.size(); ++a) {
    for (std::size_t b = a + 1; b < targets.size(); ++b) {
      const Rational& d = space.dist(targets[a], targets[b]);
      if (d > diam) diam = d;
    }
  }
  if (diam == 0) fail(Errc::degenerate_targets, "targets have diameter 0");

  const Rational step = rat(1, grid.q);
  const int n = static_cast<int>(targets.size());
  Rational gamma = floor_to_step(eps, grid.q);
  Rational third = floor_to_step(diam / 3 - step, grid.q);
  if (third < gamma) gamma = third;
  if (n >= 2) {
    Rational sep = min_pairwise_distance(space, targets);
    Rational ball = floor_to_step((sep - step) / (2 * n), grid.q);
    if (ball < gamma) gamma = ball;
  }
  if (gamma <= 0) {
    fail(Errc::no_admissible_gamma, "grid 1/" + std::to_string(grid.q) +
                                        " admits no gamma for eps " + format_rational(eps));
  }
  return gamma;
}

std::optional<std::pair<int, int>> threshold_violation(const MetricSpace& space,
                                                       const KatetovFunction& f,
                                                       const std::vector<int>& targets,
                                                       const Rational& gamma,
                                                       const Rational& diam_targets,
                                                       int max_level) {
  const int n = static_cast<int>(targets.size());
  for (int x = 0; x < space.size(); ++x) {
    for (int level = 1; level <= max_level; ++level) {
      if (f.at(x) >= diam_targets + level * gamma) continue;
      bool inside_some_ball = false;
      for (int j = 1; j < level && j <= n; ++j) {
        if (space.dist(x, targets[static_cast<std::size_t>(j - 1)]) < (level - j) * gamma) {
          inside_some_ball = true;
          break;
        }
      }
      if (!inside_some_ball) return std::make_pair(x, level);
    }
  }
  return std::nullopt;
}

KatetovFunction separator_function(SpacePtr space, const std::vector<int>& targets,
                                   const Rational& gamma, const Rational& diam_targets) {
  require_distinct(targets);
  if (gamma <= 0) fail(Errc::usage_error, "gamma must be positive");
  // Values follow the tuple order; the controller subset is sorted, so pair
  // them up before sorting.
  std::vector<std::pair<int, Rational>> assignment;
  assignment.reserve(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) {
    assignment.emplace_back(targets[i], diam_targets + static_cast<int>(i + 1) * gamma);
  }
  std::sort(assignment.begin(), assignment.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<int> indices;
  std::vector<Rational> values;
  for (auto& [idx, v] : assignment) {
    indices.push_back(idx);
    values.push_back(std::move(v));
  }
  KatetovFunction f;
  try {
    f = katetov_extension(subspace(space, indices), values);
  } catch (const Error& e) {
    if (e.code() == Errc::not_katetov_on_subset) {
      fail(Errc::not_katetov, std::string("separator profile is not admissible: ") + e.what());
    }
    throw;
  }
  if (auto witness = threshold_violation(*space, f, targets, gamma, diam_targets,
                                         static_cast<int>(targets.size()) + 1)) {
    fail(Errc::not_katetov, "threshold property fails at point " +
                                space->point_id(witness->first) + ", level " +
                                std::to_string(witness->second));
  }
  return f;
}

Lemma1Instance build_lemma1_instance(const Approximant& approximant, GroupPtr group,
                                     const std::vector<int>& targets, const Rational& eps) {
  if (targets.empty()) fail(Errc::empty_subset, "no targets");
  require_distinct(targets);
  if (eps <= 0) fail(Errc::usage_error, "eps must be positive");
  if (!group->space()->same_geometry(*approximant.space)) {
    fail(Errc::group_mismatch, "group does not act on the approximant's space");
  }

  Lemma1Instance inst;
  inst.base_group = group;
  inst.targets = targets;
  inst.eps = eps;

  SubspaceRef target_ref = subspace(approximant.space, targets);
  inst.diam_targets = diameter(target_ref);
  if (inst.diam_targets == 0) {
    // Single target: V[x; eps] is itself a one-anchor basic set.
    inst.degenerate = true;
    inst.grown = approximant;
    inst.gamma = eps;
    inst.y = targets.front();
    GroupExtension ext = trivial_group_extension(group);
    inst.extended_group = std::move(ext.extended);
    inst.ext_to_base = std::move(ext.ext_to_base);
    return inst;
  }

  inst.gamma = choose_gamma(*approximant.space, targets, eps, approximant.grid);
  // Disjointness margin used by the injection argument.
  const int n = static_cast<int>(targets.size());
  Rational sep = min_pairwise_distance(*approximant.space, targets);
  if (!(sep > 2 * n * inst.gamma)) {
    fail(Errc::containment_failure, "gamma does not separate the target balls");
  }

  KatetovFunction base_separator =
      separator_function(approximant.space, targets, inst.gamma, inst.diam_targets);
  inst.orbit_union = group->orbit_union(targets);

  std::vector<Rational> orbit_values;
  orbit_values.reserve(inst.orbit_union.size());
  for (int a : inst.orbit_union) orbit_values.push_back(base_separator.at(a));
  RealizedPoint realized =
      extension_with_realized_point(approximant, inst.orbit_union, orbit_values, "y0");
  inst.grown = std::move(realized.approximant);
  inst.y = realized.point;
  inst.y_added = realized.added;

  inst.separator = separator_function(inst.grown.space, targets, inst.gamma, inst.diam_targets);
  for (std::size_t i = 0; i < inst.orbit_union.size(); ++i) {
    if (inst.grown.space->dist(inst.y, inst.orbit_union[i]) != orbit_values[i]) {
      fail(Errc::containment_failure, "realized point does not match the separator on the orbit");
    }
  }

  GroupExtension ext = inst.y_added ? extend_group_to_grown_space(group, inst.grown.space)
                                    : trivial_group_extension(group);
  inst.extended_group = std::move(ext.extended);
  inst.ext_to_base = std::move(ext.ext_to_base);
  inst.dropped = std::move(ext.dropped);
  return inst;
}

Lemma1Report verify_lemma1(const Lemma1Instance& inst) {
  Lemma1Report report;
  report.degenerate = inst.degenerate;
  report.gamma = inst.gamma;
  report.y_id = inst.grown.space->point_id(inst.y);
  report.y_added = inst.y_added;
  report.base_order = inst.base_group->order();
  report.extended_order = inst.extended_group->order();
  for (int e : inst.dropped) report.dropped_cycles.push_back(inst.base_group->cycle_notation(e));

  const IsometryGroup& gy = *inst.extended_group;
  std::vector<std::pair<int, Rational>> target_anchors;
  for (int t : inst.targets) target_anchors.emplace_back(t, inst.eps);
  NbhdSet refined = nbhd(inst.extended_group, {{inst.y, inst.gamma}});
  NbhdSet wide = nbhd(inst.extended_group, target_anchors);
  report.refined_size = static_cast<int>(refined.members.size());
  report.target_nbhd_size = static_cast<int>(wide.members.size());

  auto note_failure = [&](const std::string& what) { report.failures.push_back(what); };

  if (!is_subset(refined.members, wide.members)) {
    for (int e : refined.members) {
      if (!std::binary_search(wide.members.begin(), wide.members.end(), e)) {
        note_failure("containment fails at " + gy.cycle_notation(e));
      }
    }
  }

  if (inst.degenerate) {
    report.passed = report.failures.empty();
    report.details["degenerate"] = true;
    return report;
  }

  const KatetovFunction& f = *inst.separator;
  const MetricSpace& grown = *inst.grown.space;
  const int n = static_cast<int>(inst.targets.size());

  if (auto witness = threshold_violation(grown, f, inst.targets, inst.gamma,
                                         inst.diam_targets, n + 1)) {
    note_failure("threshold property fails at " + grown.point_id(witness->first) +
                 " level " + std::to_string(witness->second));
  }

  int transfers_checked = 0;
  int injections_checked = 0;
  for (int e : refined.members) {
    const Rational y_move = grown.dist(inst.y, gy.apply(e, inst.y));
    // Displacement transfer over the whole orbit union.
    for (int x : inst.orbit_union) {
      const int gx = gy.apply(e, x);
      if (grown.dist(inst.y, x) != f.at(x) || grown.dist(inst.y, gx) != f.at(gx)) {
        note_failure("separator does not match the realized profile on the orbit");
        continue;
      }
      const Rational lhs = abs_diff(f.at(x), f.at(gx));
      const Rational middle = abs_diff(grown.dist(gy.apply(e, inst.y), gx), grown.dist(inst.y, gx));
      if (lhs != middle || lhs > y_move || !(lhs < inst.gamma)) {
        note_failure("displacement transfer fails at " + grown.point_id(x) + " under " +
                     gy.cycle_notation(e));
      }
      ++transfers_checked;
    }
    // Ball membership and the index-decreasing injection.
    std::vector<int> phi(static_cast<std::size_t>(n), -1);
    for (int i = 1; i <= n; ++i) {
      const int xi = inst.targets[static_cast<std::size_t>(i - 1)];
      const int gxi = gy.apply(e, xi);
      if (!(f.at(gxi) < inst.diam_targets + (i + 1) * inst.gamma)) {
        note_failure("image value bound fails at target " + grown.point_id(xi) + " under " +
                     gy.cycle_notation(e));
        continue;
      }
      int home = -1;
      for (int j = 1; j <= i; ++j) {
        const int xj = inst.targets[static_cast<std::size_t>(j - 1)];
        if (grown.dist(gxi, xj) < (i - j + 1) * inst.gamma) {
          if (home >= 0) {
            note_failure("image of " + grown.point_id(xi) + " lies in two separated balls");
          }
          home = j;
        }
      }
      if (home < 0) {
        note_failure("image of " + grown.point_id(xi) + " escapes every ball under " +
                     gy.cycle_notation(e));
        continue;
      }
      phi[static_cast<std::size_t>(i - 1)] = home;
      if (home > i) note_failure("injection exceeds its index");  // unreachable by the scan bound
    }
    std::set<int> seen;
    bool total = true;
    for (int i = 0; i < n; ++i) {
      if (phi[static_cast<std::size_t>(i)] < 0) {
        total = false;
        continue;
      }
      if (!seen.insert(phi[static_cast<std::size_t>(i)]).second) {
        note_failure("injection repeats an index under " + gy.cycle_notation(e));
      }
    }
    if (total) {
      for (int i = 0; i < n; ++i) {
        if (phi[static_cast<std::size_t>(i)] != i + 1) {
          note_failure("injection is not the identity under " + gy.cycle_notation(e));
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      const int xi = inst.targets[static_cast<std::size_t>(i)];
      if (!(grown.dist(xi, gy.apply(e, xi)) < inst.eps)) {
        note_failure("conclusion fails at target " + grown.point_id(xi) + " under " +
                     gy.cycle_notation(e));
      }
    }
    ++injections_checked;
  }

  report.details["transfers_checked"] = transfers_checked;
  report.details["members_checked"] = injections_checked;
  report.passed = report.failures.empty();
  return report;
}

}  // namespace urykat
