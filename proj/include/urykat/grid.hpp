#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "urykat/metric_space.hpp"

namespace urykat {

// Admissible values are {i/q : 0 <= i <= q*cap}. The cap bounds enumeration
// and stored approximant distances; realized separator points may exceed it
// (they only need step representability).
struct Grid {
  int q = 1;
  Rational cap = 1;
};

Grid make_grid(int q, Rational cap);
Grid parse_grid(const std::string& text);  // "q:B", e.g. "2:2" or "6:3/2"
std::string format_grid(const Grid& grid);

Rational grid_step(const Grid& grid);
bool on_grid(const Grid& grid, const Rational& value);           // within [0, cap]
bool step_representable(const Grid& grid, const Rational& value);  // >= 0, multiple of 1/q

// All grid values 0, 1/q, ..., cap in ascending order.
std::vector<Rational> grid_ladder(const Grid& grid);

// Enumerates every grid-valued Katetov function on the given subset of the
// space, in lexicographically ascending order of the value vector (indexed
// like subset_indices). Return false from the callback to stop early.
// Returns false iff the callback stopped the walk.
bool enumerate_grid_katetov(const MetricSpace& space, const std::vector<int>& subset_indices,
                            const Grid& grid,
                            const std::function<bool(const std::vector<Rational>&)>& visit);

// Same admissibility constraints, but values are chosen uniformly at random
// from the admissible range of each coordinate. Returns an empty vector only
// if the subset admits no grid profile at all.
std::vector<Rational> sample_grid_katetov(const MetricSpace& space,
                                          const std::vector<int>& subset_indices,
                                          const Grid& grid, std::uint64_t& rng_state);

// xorshift-style deterministic generator used by the samplers.
std::uint64_t next_random(std::uint64_t& state);

}  // namespace urykat
