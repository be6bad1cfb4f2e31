#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "urykat/approximant.hpp"
#include "urykat/isometry.hpp"

namespace urykat {

// Identity-neighbourhood family used for the uniformity checks: the basic
// sets over anchor tuples and grid radii, plus {id} and the whole group,
// deduplicated by membership and sorted largest first.
struct UniformityBasis {
  GroupPtr group;
  std::vector<NbhdSet> sets;
};

UniformityBasis generate_basis(GroupPtr group, const Grid& grid, int max_anchors = 2);

struct DiscretenessVerdict {
  bool discrete = true;
  int witness_a = -1;
  int witness_b = -1;
};

// Pairwise disjointness of the cosets aV.
DiscretenessVerdict is_left_uniformly_discrete(const IsometryGroup& group,
                                               const ElementSet& subset, const NbhdSet& v);

struct NeutralityResult {
  bool found = false;
  std::optional<NbhdSet> u;
  // On failure: one witness product u*a outside A*V per basis element.
  std::vector<std::tuple<int, int, int>> witnesses;  // (basis index, u, a)
};

// Largest basis element U with U*A ⊆ A*V.
NeutralityResult neutrality_check(const IsometryGroup& group, const ElementSet& subset,
                                  const NbhdSet& v, const UniformityBasis& basis);

struct ReductionCase {
  bool passed = false;
  int basis_w = -1;                 // chosen W
  ElementSet maximal_b;
  std::vector<std::string> failures;
};

// Replays the uniformly-discrete reduction on one (A, V): picks symmetric W
// with W^4 ⊆ V, builds a maximal B ⊆ AW with disjoint bW, checks A ⊆ BW^2,
// finds U neutral for (B, W) and verifies the inclusion chain
// UA ⊆ UBW^2 ⊆ BW^3 ⊆ AW^4 ⊆ AV by exact set algebra.
ReductionCase reduction_case(const IsometryGroup& group, const UniformityBasis& basis,
                             const ElementSet& subset, const NbhdSet& v);

struct ReductionReport {
  bool passed = false;
  int cases = 0;
  std::vector<std::string> failures;
};

// Driver over a deterministic family of subsets and every basis element.
ReductionReport discrete_reduction_check(const IsometryGroup& group,
                                         const UniformityBasis& basis,
                                         const std::vector<ElementSet>& subsets);

// The functional-balance construction: V = V[x;2e], the profile
// f = D - d(F, .) over the complement F of the open eps-thickening of Ax,
// the point z realizing f on the orbit Gx, and W = V[z;eps/3].
struct Theorem4Instance {
  Approximant grown;
  GroupPtr base_group;
  GroupPtr extended_group;       // acts on grown.space
  std::vector<int> ext_to_base;
  std::vector<int> dropped;
  ElementSet a_set;              // indices into base_group
  int x = -1;
  Rational eps;
  Rational big_d;
  std::vector<int> orbit;        // Gx, base indices
  std::vector<int> ax_points;    // ax per a in a_set order
  std::vector<int> complement;   // F, base indices
  std::vector<Rational> f_values;  // on base points
  std::vector<Rational> dist_f_to_ax;  // recorded d(F, ax) per a
  int z = -1;
  bool z_added = false;
  NbhdSet v;                     // V[x;2eps] within base_group
  ElementSet w_members;          // indices into extended_group
  nlohmann::json construction_log;
};

Theorem4Instance theorem4_construct(const Approximant& approximant, GroupPtr group,
                                    const ElementSet& subset, int x, const Rational& eps);

struct Theorem4Report {
  bool passed = false;
  int pairs_checked = 0;
  std::vector<std::string> failures;
  std::string first_failed_step;
  nlohmann::json details;
};

// Per-(w, a) proof replay plus the closing set inclusion
// W*A ⊆ A*(V[x;eps] ∩ G) ⊆ A*V.
Theorem4Report verify_theorem4(const Theorem4Instance& instance);

// Same instance with a tampered radius; used by the negative tests.
Theorem4Instance with_inflated_eps(Theorem4Instance instance, const Rational& new_eps);

struct DisplacementReport {
  bool passed = false;
  int functions_checked = 0;
  int pairs_checked = 0;
  bool bound_attained = false;  // some (f, g) reaches eps exactly
  std::vector<std::string> failures;
};

// Premise: every v in V moves every point by at most eps. Conclusion checked
// for every enumerated (or sampled) grid profile f and every v: the shifted
// profile x -> f(v^{-1} x) stays within eps of f in the sup metric, via the
// max-displacement bound. sample_count 0 means exhaustive grid enumeration.
DisplacementReport displacement_bound_check(const IsometryGroup& group, const ElementSet& v_set,
                                            const Rational& eps, const Grid& grid,
                                            int sample_count = 0, std::uint64_t seed = 1);

// Largest element set satisfying the premise for the given eps.
ElementSet max_displacement_set(const IsometryGroup& group, const Rational& eps);

}  // namespace urykat
