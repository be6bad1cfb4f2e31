#include "urykat/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "urykat/grid.hpp"

namespace urykat::oracle {

namespace {

struct PairPos {
  int i;
  int j;
};

}  // namespace

void enumerate_scaled_spaces(int n, int top,
                             const std::function<void(const ScaledSpace&)>& visit) {
  ScaledSpace space;
  space.n = n;
  space.dist.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  if (n == 1) {
    visit(space);
    return;
  }
  std::vector<PairPos> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.push_back(PairPos{i, j});
  }
  auto set = [&](int i, int j, int v) {
    space.dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] = v;
    space.dist[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = v;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == pairs.size()) {
      visit(space);
      return;
    }
    const auto [i, j] = pairs[idx];
    for (int v = 1; v <= top; ++v) {
      bool ok = true;
      for (int k = 0; k < i && ok; ++k) {
        const int a = space.at(k, i);
        const int b = space.at(k, j);
        ok = v <= a + b && a <= v + b && b <= v + a;
      }
      if (!ok) continue;
      set(i, j, v);
      rec(idx + 1);
    }
    set(i, j, 0);
  };
  rec(0);
}

std::vector<std::vector<int>> lipschitz_grid_functions(const ScaledSpace& space, int top) {
  std::vector<std::vector<int>> out;
  std::vector<int> values(static_cast<std::size_t>(space.n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == space.n) {
      out.push_back(values);
      return;
    }
    for (int v = 0; v <= top; ++v) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        ok = std::abs(v - values[static_cast<std::size_t>(j)]) <= space.at(i, j);
      }
      if (!ok) continue;
      values[static_cast<std::size_t>(i)] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

SpacePtr to_rational_space(const ScaledSpace& space, int q) {
  std::vector<std::string> points;
  points.reserve(static_cast<std::size_t>(space.n));
  for (int i = 0; i < space.n; ++i) points.push_back("p" + std::to_string(i));
  std::vector<std::vector<Rational>> dist;
  for (int i = 0; i < space.n; ++i) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(space.n));
    for (int j = 0; j < space.n; ++j) row.push_back(rat(space.at(i, j), q));
    dist.push_back(std::move(row));
  }
  return MetricSpace::create(std::move(points), std::move(dist), false);
}

std::vector<Isometry> isometries_by_filter(const MetricSpace& space) {
  const int n = space.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Isometry> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = i + 1; j < n && ok; ++j) {
        ok = space.dist(i, j) == space.dist(perm[static_cast<std::size_t>(i)],
                                            perm[static_cast<std::size_t>(j)]);
      }
    }
    if (ok) out.push_back(Isometry{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SpacePtr random_metric_space(int points, std::uint64_t seed) {
  std::uint64_t state = seed;
  const int n = points;
  std::vector<int> d(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto at = [&](int i, int j) -> int& {
    return d[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int v = 1 + static_cast<int>(next_random(state) % 8);  // units of 1/2
      at(i, j) = v;
      at(j, i) = v;
    }
  }
  // Shortest-path closure restores the triangle inequality exactly.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        if (i == k) continue;
        for (int j = 0; j < n; ++j) {
          if (j == i || j == k) continue;
          const int through = at(i, k) + at(k, j);
          if (through < at(i, j)) {
            at(i, j) = through;
            changed = true;
          }
        }
      }
    }
  }
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<std::vector<Rational>> dist;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(rat(at(i, j), 2));
    dist.push_back(std::move(row));
  }
  return MetricSpace::create(std::move(ids), std::move(dist), false);
}

}  // namespace urykat::oracle
