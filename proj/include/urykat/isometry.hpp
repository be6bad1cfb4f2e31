#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "urykat/metric_space.hpp"

namespace urykat {

// A distance-preserving permutation, img[i] = image of point i.
struct Isometry {
  std::vector<int> img;
};

class IsometryGroup;
using GroupPtr = std::shared_ptr<const IsometryGroup>;

// A fully enumerated group of isometries of one space. Closure, inverses
// and the identity are verified at construction.
class IsometryGroup : public std::enable_shared_from_this<IsometryGroup> {
 public:
  // All distance-preserving permutations by pruned backtracking; node_budget
  // bounds the search tree.
  static GroupPtr full(SpacePtr space, std::uint64_t node_budget = 50'000'000);

  // Wraps an explicit element list (e.g. a subgroup); validates that each
  // permutation is an isometry and that the list is closed.
  static GroupPtr from_elements(SpacePtr space, std::vector<Isometry> elements);

  const SpacePtr& space() const { return space_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const Isometry& element(int e) const { return elements_[static_cast<std::size_t>(e)]; }
  int identity() const { return identity_; }

  int compose(int a, int b) const;  // index of a after b (a.img[b.img[x]])
  int inverse(int a) const;
  int apply(int e, int point) const { return elements_[static_cast<std::size_t>(e)].img[static_cast<std::size_t>(point)]; }

  // Index of a permutation in this enumeration, or -1.
  int index_of(const Isometry& iso) const;

  // Orbit of a point under the whole group, sorted.
  std::vector<int> orbit(int point) const;
  std::vector<int> orbit_union(const std::vector<int>& points) const;

  std::string cycle_notation(int e) const;
  int parse_cycles(const std::string& text) const;  // index lookup; throws UnknownPoint/GroupMismatch

 private:
  IsometryGroup() = default;
  void check_axioms() const;

  SpacePtr space_;
  std::vector<Isometry> elements_;  // sorted lexicographically by img
  std::vector<int> inverse_;
  int identity_ = -1;
};

// Cycle helpers usable without a group.
std::string permutation_cycles(const MetricSpace& space, const std::vector<int>& img);
std::vector<int> parse_permutation_cycles(const MetricSpace& space, const std::string& text);

// A partial distance-preserving matching on one space.
struct PartialIsometry {
  SpacePtr space;
  std::vector<std::pair<int, int>> pairs;
};

// Validates distinctness on both sides and exact distance preservation.
PartialIsometry partial_isometry(SpacePtr space, std::vector<std::pair<int, int>> pairs);
bool partial_isometry_valid(const MetricSpace& space,
                            const std::vector<std::pair<int, int>>& pairs);

struct BackAndForthResult {
  bool success = false;
  PartialIsometry extension;
  // On failure: the side, anchor set and profile that no point realizes.
  bool forward_failure = true;
  std::vector<int> missing_anchor;
  std::vector<Rational> missing_profile;
};

// Alternating one-point extension choosing the canonically smallest
// realizing point, until the map covers target_size points.
BackAndForthResult extend_partial_isometry(const PartialIsometry& start, int target_size);

// Sorted, duplicate-free element index set within one group.
using ElementSet = std::vector<int>;

ElementSet full_set(const IsometryGroup& group);
ElementSet singleton_set(int element);
ElementSet product(const IsometryGroup& group, const ElementSet& a, const ElementSet& b);
ElementSet inverse_set(const IsometryGroup& group, const ElementSet& a);
ElementSet power(const IsometryGroup& group, const ElementSet& a, int exponent);
bool is_subset(const ElementSet& a, const ElementSet& b);
bool disjoint(const ElementSet& a, const ElementSet& b);
bool is_symmetric_set(const IsometryGroup& group, const ElementSet& a);

// V[anchors; eps] within a group: all g with d(x_i, g x_i) < eps_i, strict.
struct NbhdSet {
  GroupPtr group;
  std::vector<std::pair<int, Rational>> anchors;
  ElementSet members;
};

NbhdSet nbhd(GroupPtr group, std::vector<std::pair<int, Rational>> anchors);

// Restriction of a group to the elements that extend past a freshly adjoined
// point (which any extension must fix). grown must hold the base points as a
// prefix plus one extra point.
struct GroupExtension {
  GroupPtr extended;              // acts on grown
  std::vector<int> ext_to_base;   // element index map into the base group
  std::vector<int> dropped;       // base elements with no extension
};

GroupExtension extend_group_to_grown_space(const GroupPtr& base, SpacePtr grown);

// Identity extension for the case where no point was added.
GroupExtension trivial_group_extension(const GroupPtr& base);

}  // namespace urykat
