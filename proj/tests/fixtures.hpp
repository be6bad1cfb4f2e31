#pragma once

#include "urykat/metric_space.hpp"

namespace urykat::testing {

inline SpacePtr singleton() {
  return MetricSpace::create({"x"}, {{Rational(0)}}, false);
}

inline SpacePtr pair_space(const Rational& d, bool pseudo = false) {
  return MetricSpace::create({"a", "b"}, {{0, d}, {d, 0}}, pseudo);
}

// d(a,b) = d(b,c) = 1, d(a,c) = 2.
inline SpacePtr path3() {
  return MetricSpace::create({"a", "b", "c"},
                             {{rat(0), rat(1), rat(2)},
                              {rat(1), rat(0), rat(1)},
                              {rat(2), rat(1), rat(0)}},
                             false);
}

inline SpacePtr equilateral3(const Rational& side = Rational(1)) {
  return MetricSpace::create({"a", "b", "c"},
                             {{0, side, side}, {side, 0, side}, {side, side, 0}},
                             false);
}

// L1 square with side 1 and diagonal 2; symmetry group of order 8.
inline SpacePtr l1_square() {
  return MetricSpace::create({"s0", "s1", "s2", "s3"},
                             {{rat(0), rat(1), rat(1), rat(2)},
                              {rat(1), rat(0), rat(2), rat(1)},
                              {rat(1), rat(2), rat(0), rat(1)},
                              {rat(2), rat(1), rat(1), rat(0)}},
                             false);
}

}  // namespace urykat::testing
