#include "urykat/approximant.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

namespace urykat {

namespace {

// Emits nonempty subsets by size, then lexicographically within a size.
void for_each_subset(int n, int max_size, const std::function<bool(const std::vector<int>&)>& visit) {
  for (int s = 1; s <= max_size; ++s) {
    std::vector<int> stack;
    std::function<bool(int)> fixed = [&](int start) -> bool {
      if (static_cast<int>(stack.size()) == s) return visit(stack);
      for (int i = start; i <= n - (s - static_cast<int>(stack.size())); ++i) {
        stack.push_back(i);
        if (!fixed(i + 1)) return false;
        stack.pop_back();
      }
      return true;
    };
    if (!fixed(0)) return;
  }
}

std::vector<std::vector<int>> all_subsets(int n, int max_size) {
  std::vector<std::vector<int>> out;
  for_each_subset(n, max_size, [&](const std::vector<int>& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

int max_round(const std::vector<GrowthRecord>& provenance) {
  int r = 0;
  for (const auto& rec : provenance) r = std::max(r, rec.round);
  return r;
}

void require_on_grid(const MetricSpace& space, const Grid& grid) {
  for (int i = 0; i < space.size(); ++i) {
    for (int j = i + 1; j < space.size(); ++j) {
      if (!on_grid(grid, space.dist(i, j))) {
        fail(Errc::grid_overflow,
             "distance d(" + space.point_id(i) + "," + space.point_id(j) + ") = " +
                 format_rational(space.dist(i, j)) + " is off the grid " + format_grid(grid));
      }
    }
  }
}

}  // namespace

int find_realizing_point(const MetricSpace& space, const std::vector<int>& subset,
                         const std::vector<Rational>& values) {
  for (int y = 0; y < space.size(); ++y) {
    bool match = true;
    for (std::size_t a = 0; a < subset.size(); ++a) {
      if (space.dist(y, subset[a]) != values[a]) {
        match = false;
        break;
      }
    }
    if (match) return y;
  }
  return -1;
}

OnePointCheck check_one_point_property(const MetricSpace& space, int k, const Grid& grid) {
  OnePointCheck result;
  result.certified = true;
  if (k <= 0) return result;
  for_each_subset(space.size(), std::min(k, space.size()), [&](const std::vector<int>& subset) {
    return enumerate_grid_katetov(space, subset, grid, [&](const std::vector<Rational>& g) {
      if (find_realizing_point(space, subset, g) < 0) {
        result.certified = false;
        result.missing = OnePointCounterexample{subset, g};
        return false;
      }
      return true;
    });
  });
  return result;
}

OnePointCheck check_one_point_property_shuffled(const MetricSpace& space, int k,
                                                const Grid& grid, std::uint64_t seed) {
  OnePointCheck result;
  result.certified = true;
  if (k <= 0) return result;
  auto subsets = all_subsets(space.size(), std::min(k, space.size()));
  std::uint64_t state = seed;
  for (std::size_t i = subsets.size(); i > 1; --i) {
    std::swap(subsets[i - 1], subsets[next_random(state) % i]);
  }
  for (const auto& subset : subsets) {
    std::vector<std::vector<Rational>> profiles;
    enumerate_grid_katetov(space, subset, grid, [&](const std::vector<Rational>& g) {
      profiles.push_back(g);
      return true;
    });
    for (std::size_t i = profiles.size(); i > 1; --i) {
      std::swap(profiles[i - 1], profiles[next_random(state) % i]);
    }
    for (const auto& g : profiles) {
      // Scan from a rotated start so realization search order differs too.
      const int n = space.size();
      const int start = static_cast<int>(next_random(state) % static_cast<std::uint64_t>(n));
      bool found = false;
      for (int off = 0; off < n && !found; ++off) {
        const int y = (start + off) % n;
        bool match = true;
        for (std::size_t a = 0; a < subset.size(); ++a) {
          if (space.dist(y, subset[a]) != g[a]) {
            match = false;
            break;
          }
        }
        found = match;
      }
      if (!found) {
        result.certified = false;
        result.missing = OnePointCounterexample{subset, g};
        return result;
      }
    }
  }
  return result;
}

std::string fresh_point_id(const MetricSpace& space, const std::string& id_hint) {
  if (!id_hint.empty() && !space.has_point(id_hint)) return id_hint;
  int counter = space.size();
  while (true) {
    std::string candidate = "p" + std::to_string(counter);
    if (!space.has_point(candidate)) return candidate;
    ++counter;
  }
}

namespace {

struct Candidate {
  std::vector<std::string> controllers;
  std::vector<Rational> control_values;
};

using CandidateMap = std::map<std::vector<Rational>, Candidate>;

CandidateMap collect_candidates(const MetricSpace& space, const Grid& grid,
                                const std::vector<std::vector<int>>& subsets,
                                std::size_t begin, std::size_t end) {
  CandidateMap found;
  for (std::size_t s = begin; s < end; ++s) {
    const auto& subset = subsets[s];
    enumerate_grid_katetov(space, subset, grid, [&](const std::vector<Rational>& g) {
      if (find_realizing_point(space, subset, g) >= 0) return true;
      // Extension min_a (g(a) + d(x,a)), truncated at the cap.
      std::vector<Rational> profile;
      profile.reserve(static_cast<std::size_t>(space.size()));
      for (int x = 0; x < space.size(); ++x) {
        Rational best = g[0] + space.dist(x, subset[0]);
        for (std::size_t a = 1; a < subset.size(); ++a) {
          Rational candidate = g[a] + space.dist(x, subset[a]);
          if (candidate < best) best = candidate;
        }
        if (best > grid.cap) best = grid.cap;
        profile.push_back(std::move(best));
      }
      auto it = found.find(profile);
      if (it == found.end()) {
        std::vector<std::string> ids;
        ids.reserve(subset.size());
        for (int idx : subset) ids.push_back(space.point_id(idx));
        found.emplace(std::move(profile), Candidate{std::move(ids), g});
      }
      return true;
    });
  }
  return found;
}

}  // namespace

Approximant extend_once(const Approximant& input, int k, std::size_t size_budget, int jobs) {
  if (k < 1) fail(Errc::usage_error, "control bound k must be >= 1");
  const MetricSpace& space = *input.space;
  if (space.diameter_all() > input.grid.cap) {
    fail(Errc::grid_overflow, "space diameter " + format_rational(space.diameter_all()) +
                                  " exceeds grid cap " + format_rational(input.grid.cap));
  }
  require_on_grid(space, input.grid);

  const auto subsets = all_subsets(space.size(), std::min(k, space.size()));
  CandidateMap candidates;
  if (jobs <= 1 || subsets.size() < 2) {
    candidates = collect_candidates(space, input.grid, subsets, 0, subsets.size());
  } else {
    const std::size_t chunk = (subsets.size() + static_cast<std::size_t>(jobs) - 1) /
                              static_cast<std::size_t>(jobs);
    std::vector<std::future<CandidateMap>> futures;
    for (std::size_t begin = 0; begin < subsets.size(); begin += chunk) {
      const std::size_t end = std::min(begin + chunk, subsets.size());
      futures.push_back(std::async(std::launch::async, [&, begin, end] {
        return collect_candidates(space, input.grid, subsets, begin, end);
      }));
    }
    // Merge keyed by profile; first creator (earliest chunk) wins, matching
    // the serial subset order.
    for (auto& f : futures) {
      for (auto& [profile, cand] : f.get()) {
        candidates.emplace(profile, std::move(cand));
      }
    }
  }

  const std::size_t old_n = static_cast<std::size_t>(space.size());
  if (old_n + candidates.size() > size_budget) {
    fail(Errc::size_budget_exceeded,
         std::to_string(old_n + candidates.size()) + " points would exceed budget " +
             std::to_string(size_budget));
  }
  if (candidates.empty()) return input;

  std::vector<std::string> points = space.points();
  std::vector<const std::vector<Rational>*> profiles;
  std::vector<std::string> new_ids;
  for (const auto& [profile, cand] : candidates) profiles.push_back(&profile);
  {
    int counter = static_cast<int>(old_n);
    for (std::size_t idx = 0; idx < profiles.size(); ++idx) {
      std::string id;
      do {
        id = "p" + std::to_string(counter++);
      } while (space.has_point(id) ||
               std::find(new_ids.begin(), new_ids.end(), id) != new_ids.end());
      new_ids.push_back(id);
      points.push_back(id);
    }
  }

  const std::size_t total = old_n + profiles.size();
  std::vector<std::vector<Rational>> dist(total);
  for (std::size_t i = 0; i < old_n; ++i) {
    dist[i] = space.row(static_cast<int>(i));
    dist[i].reserve(total);
    for (const auto* profile : profiles) dist[i].push_back((*profile)[i]);
  }
  for (std::size_t a = 0; a < profiles.size(); ++a) {
    std::vector<Rational> row;
    row.reserve(total);
    for (std::size_t i = 0; i < old_n; ++i) row.push_back((*profiles[a])[i]);
    for (std::size_t b = 0; b < profiles.size(); ++b) {
      if (a == b) {
        row.push_back(Rational(0));
        continue;
      }
      Rational sup = 0;
      for (std::size_t i = 0; i < old_n; ++i) {
        Rational d = abs_diff((*profiles[a])[i], (*profiles[b])[i]);
        if (d > sup) sup = d;
      }
      row.push_back(std::move(sup));
    }
    dist[old_n + a] = std::move(row);
  }

  Approximant out;
  out.grid = input.grid;
  out.space = MetricSpace::create(std::move(points), std::move(dist), false);
  out.provenance = input.provenance;
  const int round = max_round(input.provenance) + 1;
  {
    std::size_t idx = 0;
    for (const auto& [profile, cand] : candidates) {
      out.provenance.push_back(
          GrowthRecord{round, new_ids[idx], cand.controllers, cand.control_values});
      ++idx;
    }
  }
  out.witness_k = 0;  // not certified yet
  return out;
}

Approximant build_approximant(SpacePtr seed, int k, int rounds, const Grid& grid,
                              std::size_t size_budget, int jobs) {
  if (rounds < 0) fail(Errc::usage_error, "rounds must be >= 0");
  if (rounds > 0 && k < 1) fail(Errc::usage_error, "control bound k must be >= 1");
  require_on_grid(*seed, grid);
  if (static_cast<std::size_t>(seed->size()) > size_budget) {
    fail(Errc::size_budget_exceeded, "seed already exceeds the size budget");
  }
  Approximant current{std::move(seed), grid, 0, {}};
  for (int r = 0; r < rounds; ++r) {
    Approximant next = extend_once(current, k, size_budget, jobs);
    if (next.space->size() == current.space->size()) {
      current = std::move(next);
      break;  // fixed point; further rounds are no-ops
    }
    current = std::move(next);
  }
  int certified = 0;
  for (int probe = 1; probe <= k; ++probe) {
    if (check_one_point_property(*current.space, probe, grid).certified) {
      certified = probe;
    } else {
      break;
    }
  }
  current.witness_k = certified;
  return current;
}

RealizedPoint extension_with_realized_point(const Approximant& input,
                                            const std::vector<int>& subset,
                                            const std::vector<Rational>& values,
                                            const std::string& id_hint) {
  if (subset.empty()) fail(Errc::empty_subset, "realization over empty subset");
  if (subset.size() != values.size()) {
    fail(Errc::length_mismatch, "profile length does not match subset");
  }
  for (const auto& v : values) {
    if (!is_multiple_of_step(v, input.grid.q) || v < 0) {
      fail(Errc::grid_overflow,
           "profile value " + format_rational(v) + " is not representable at step 1/" +
               std::to_string(input.grid.q));
    }
  }
  int existing = find_realizing_point(*input.space, subset, values);
  if (existing >= 0) return RealizedPoint{input, existing, false};

  KatetovFunction ext = katetov_extension(subspace(input.space, subset), values);
  for (const auto& v : ext.values) {
    if (!is_multiple_of_step(v, input.grid.q) || v < 0) {
      fail(Errc::grid_overflow,
           "extension value " + format_rational(v) + " is not representable at step 1/" +
               std::to_string(input.grid.q));
    }
  }
  std::string id = fresh_point_id(*input.space, id_hint);
  SpacePtr grown = one_point_extension(ext, id);

  Approximant out;
  out.space = grown;
  out.grid = input.grid;
  out.provenance = input.provenance;
  std::vector<std::string> controller_ids;
  controller_ids.reserve(subset.size());
  for (int idx : subset) controller_ids.push_back(input.space->point_id(idx));
  out.provenance.push_back(GrowthRecord{-1, id, std::move(controller_ids), values});
  out.witness_k = 0;  // growth invalidates the certificate
  return RealizedPoint{std::move(out), grown->size() - 1, true};
}

}  // namespace urykat
