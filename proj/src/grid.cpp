#include "urykat/grid.hpp"

namespace urykat {

namespace {

Rational ceil_to_step(const Rational& value, int q) {
  mpz_class ceil_num;
  Rational scaled = value * q;
  scaled.canonicalize();
  mpz_cdiv_q(ceil_num.get_mpz_t(), scaled.get_num().get_mpz_t(),
             scaled.get_den().get_mpz_t());
  Rational r(ceil_num, q);
  r.canonicalize();
  return r;
}

long index_on_step(const Rational& value, int q) {
  Rational scaled = value * q;
  scaled.canonicalize();
  return scaled.get_num().get_si();
}

}  // namespace

Grid make_grid(int q, Rational cap) {
  if (q < 1) fail(Errc::usage_error, "grid granularity must be >= 1");
  if (cap <= 0) fail(Errc::usage_error, "grid cap must be positive");
  if (!is_multiple_of_step(cap, q)) {
    fail(Errc::usage_error, "grid cap must be a multiple of 1/q");
  }
  return Grid{q, std::move(cap)};
}

Grid parse_grid(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) fail(Errc::usage_error, "grid format is q:B");
  int q = 0;
  try {
    q = std::stoi(text.substr(0, colon));
  } catch (...) {
    fail(Errc::usage_error, "grid format is q:B");
  }
  return make_grid(q, parse_rational(text.substr(colon + 1)));
}

std::string format_grid(const Grid& grid) {
  return std::to_string(grid.q) + ":" + format_rational(grid.cap);
}

Rational grid_step(const Grid& grid) { return rat(1, grid.q); }

bool step_representable(const Grid& grid, const Rational& value) {
  return value >= 0 && is_multiple_of_step(value, grid.q);
}

bool on_grid(const Grid& grid, const Rational& value) {
  return step_representable(grid, value) && value <= grid.cap;
}

std::vector<Rational> grid_ladder(const Grid& grid) {
  std::vector<Rational> out;
  const long top = index_on_step(grid.cap, grid.q);
  out.reserve(static_cast<std::size_t>(top) + 1);
  for (long i = 0; i <= top; ++i) out.push_back(rat(i, grid.q));
  return out;
}

namespace {

struct ProfileWalker {
  const MetricSpace& space;
  const std::vector<int>& subset;
  const Grid& grid;
  std::vector<Rational> values;

  // Admissible closed interval for position t given values[0..t).
  // Guaranteed nonempty (over the rationals) whenever the prefix is
  // admissible; may contain no grid point if the space is off-grid.
  std::pair<Rational, Rational> bounds(std::size_t t) const {
    Rational lo = 0;
    Rational hi = grid.cap;
    for (std::size_t s = 0; s < t; ++s) {
      const Rational& d = space.dist(subset[s], subset[t]);
      Rational lip_lo = values[s] - d;
      Rational kat_lo = d - values[s];
      Rational up = values[s] + d;
      if (lip_lo > lo) lo = lip_lo;
      if (kat_lo > lo) lo = kat_lo;
      if (up < hi) hi = up;
    }
    return {lo, hi};
  }
};

bool walk(ProfileWalker& w, std::size_t t,
          const std::function<bool(const std::vector<Rational>&)>& visit) {
  if (t == w.subset.size()) return visit(w.values);
  auto [lo, hi] = w.bounds(t);
  Rational v = ceil_to_step(lo, w.grid.q);
  const Rational step = grid_step(w.grid);
  while (v <= hi) {
    w.values[t] = v;
    if (!walk(w, t + 1, visit)) return false;
    v += step;
  }
  return true;
}

}  // namespace

bool enumerate_grid_katetov(const MetricSpace& space, const std::vector<int>& subset_indices,
                            const Grid& grid,
                            const std::function<bool(const std::vector<Rational>&)>& visit) {
  if (subset_indices.empty()) fail(Errc::empty_subset, "profile enumeration over empty subset");
  ProfileWalker w{space, subset_indices, grid, std::vector<Rational>(subset_indices.size())};
  return walk(w, 0, visit);
}

std::uint64_t next_random(std::uint64_t& state) {
  // splitmix64; deterministic across platforms.
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Rational> sample_grid_katetov(const MetricSpace& space,
                                          const std::vector<int>& subset_indices,
                                          const Grid& grid, std::uint64_t& rng_state) {
  if (subset_indices.empty()) fail(Errc::empty_subset, "profile sampling over empty subset");
  for (int attempt = 0; attempt < 64; ++attempt) {
    ProfileWalker w{space, subset_indices, grid,
                    std::vector<Rational>(subset_indices.size())};
    bool dead_end = false;
    for (std::size_t t = 0; t < subset_indices.size() && !dead_end; ++t) {
      auto [lo, hi] = w.bounds(t);
      Rational first = ceil_to_step(lo, grid.q);
      if (first > hi) {
        dead_end = true;
        break;
      }
      long span = index_on_step(floor_to_step(hi, grid.q) - first, grid.q);
      long pick = static_cast<long>(next_random(rng_state) % static_cast<std::uint64_t>(span + 1));
      w.values[t] = first + rat(pick, grid.q);
    }
    if (!dead_end) return w.values;
  }
  return {};
}

}  // namespace urykat
