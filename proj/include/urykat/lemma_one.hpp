#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "urykat/approximant.hpp"
#include "urykat/isometry.hpp"

namespace urykat {

// Largest grid multiple gamma with gamma <= eps, gamma <= D/3 - 1/q and,
// for n >= 2 targets, 2*n*gamma <= min pairwise target distance - 1/q.
// Strictness of the proof's "<" constraints is enforced by the one-step
// margin. Throws DegenerateTargets when the targets have diameter 0 and
// NoAdmissibleGamma when the grid is too coarse.
Rational choose_gamma(const MetricSpace& space, const std::vector<int>& targets,
                      const Rational& eps, const Grid& grid);

// The separating profile with value D + i*gamma at the i-th target (1-based,
// tuple order), extended over the whole space with the targets as
// controllers. Verifies the threshold implication for i = 1..n+1: any point
// with f below D + i*gamma lies within (i-j)*gamma of an earlier target.
KatetovFunction separator_function(SpacePtr space, const std::vector<int>& targets,
                                   const Rational& gamma, const Rational& diam_targets);

// Exhaustive threshold check; returns a witness (point, level) on failure.
std::optional<std::pair<int, int>> threshold_violation(const MetricSpace& space,
                                                       const KatetovFunction& f,
                                                       const std::vector<int>& targets,
                                                       const Rational& gamma,
                                                       const Rational& diam_targets,
                                                       int max_level);

// A worked single-anchor refinement: the realized point y, the gamma, and
// the group restricted to elements that survive the growth.
struct Lemma1Instance {
  Approximant grown;
  GroupPtr base_group;
  GroupPtr extended_group;          // acts on grown.space
  std::vector<int> ext_to_base;     // element index map
  std::vector<int> dropped;         // base elements with no extension
  std::vector<int> targets;         // tuple order; indices valid in both spaces
  std::vector<int> orbit_union;     // sorted base indices
  Rational eps;
  Rational gamma;
  Rational diam_targets;
  std::optional<KatetovFunction> separator;  // over grown.space
  int y = -1;
  bool y_added = false;
  bool degenerate = false;  // single target; V[x; eps] is its own refinement
};

Lemma1Instance build_lemma1_instance(const Approximant& approximant, GroupPtr group,
                                     const std::vector<int>& targets, const Rational& eps);

struct Lemma1Report {
  bool passed = false;
  bool degenerate = false;
  Rational gamma;
  std::string y_id;
  bool y_added = false;
  int base_order = 0;
  int extended_order = 0;
  int refined_size = 0;  // |V[y;gamma] ∩ G_y|
  int target_nbhd_size = 0;
  std::vector<std::string> dropped_cycles;
  std::vector<std::string> failures;
  nlohmann::json details;
};

// Exhaustive containment V[y;gamma] ⊆ V[x1..xn;eps] within the extended
// group, replaying the displacement transfer, the threshold implication and
// the index-decreasing injection for every member.
Lemma1Report verify_lemma1(const Lemma1Instance& instance);

}  // namespace urykat
