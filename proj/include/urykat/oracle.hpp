#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "urykat/isometry.hpp"
#include "urykat/metric_space.hpp"

// Independent brute-force reference implementations. Nothing here calls the
// extension or group-search code paths it is used to check.
namespace urykat::oracle {

// A space with distances in units of 1/q, kept in integers for fast
// exhaustive loops.
struct ScaledSpace {
  int n = 0;
  std::vector<int> dist;  // row-major n*n

  int at(int i, int j) const { return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)]; }
};

// Every proper metric space with exactly n points and off-diagonal values in
// 1..top (units of 1/q), in lexicographic order of the upper triangle.
void enumerate_scaled_spaces(int n, int top, const std::function<void(const ScaledSpace&)>& visit);

// All functions with values 0..top that are 1-Lipschitz on the scaled space.
std::vector<std::vector<int>> lipschitz_grid_functions(const ScaledSpace& space, int top);

// Exact rational space carrying the scaled distances divided by q.
SpacePtr to_rational_space(const ScaledSpace& space, int q);

// Unpruned isometry search: filter all n! permutations.
std::vector<Isometry> isometries_by_filter(const MetricSpace& space);

// Seeded random proper metric space with the given point count; distances
// are multiples of 1/2 obtained by shortest-path closure of a random matrix.
SpacePtr random_metric_space(int points, std::uint64_t seed);

}  // namespace urykat::oracle
