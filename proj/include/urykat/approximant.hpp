#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urykat/grid.hpp"
#include "urykat/katetov.hpp"
#include "urykat/metric_space.hpp"

namespace urykat {

// One growth event: the control set and values whose extension created the
// point. round -1 marks a direct realization outside the round loop.
struct GrowthRecord {
  int round = 0;
  std::string point_id;
  std::vector<std::string> controllers;
  std::vector<Rational> control_values;
};

// A finite grid-valued space grown towards the k-point extension property.
struct Approximant {
  SpacePtr space;
  Grid grid;
  int witness_k = 0;
  std::vector<GrowthRecord> provenance;
};

struct OnePointCounterexample {
  std::vector<int> subset;
  std::vector<Rational> values;
};

struct OnePointCheck {
  bool certified = false;
  std::optional<OnePointCounterexample> missing;
};

// Point realizing the profile exactly over the subset, or -1.
int find_realizing_point(const MetricSpace& space, const std::vector<int>& subset,
                         const std::vector<Rational>& values);

// Exhaustive check: every grid Katetov profile on every subset of size <= k
// is realized by some point. Counterexample is the first miss in canonical
// order (subsets by size then lexicographic, profiles ascending).
OnePointCheck check_one_point_property(const MetricSpace& space, int k, const Grid& grid);

// Same exhaustive content with a seeded shuffle of both enumeration orders;
// used to reproduce certificates independently of the canonical order.
OnePointCheck check_one_point_property_shuffled(const MetricSpace& space, int k,
                                                const Grid& grid, std::uint64_t seed);

// One round: realizes every unrealized grid Katetov profile on subsets of
// size <= k by a new point (extension truncated to the cap), deduplicating
// by full distance profile. New-new distances are sup distances of the
// profiles, so the old space embeds isometrically.
Approximant extend_once(const Approximant& input, int k, std::size_t size_budget,
                        int jobs = 1);

Approximant build_approximant(SpacePtr seed, int k, int rounds, const Grid& grid,
                              std::size_t size_budget, int jobs = 1);

// Returns a point y with d(y, a) = values[a] over the subset: an existing
// point when one matches, else a fresh point carrying the Katetov extension
// of the profile (no cap truncation; values must be multiples of 1/q).
struct RealizedPoint {
  Approximant approximant;
  int point = -1;
  bool added = false;
};
RealizedPoint extension_with_realized_point(const Approximant& input,
                                            const std::vector<int>& subset,
                                            const std::vector<Rational>& values,
                                            const std::string& id_hint = "");

// Fresh point id: id_hint if free, else p<n>, p<n+1>, ...
std::string fresh_point_id(const MetricSpace& space, const std::string& id_hint);

}  // namespace urykat
