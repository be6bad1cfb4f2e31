#include "urykat/katetov.hpp"

#include <algorithm>

namespace urykat {

KatetovCheck is_katetov(const MetricSpace& space, const std::vector<Rational>& values) {
  if (values.size() != static_cast<std::size_t>(space.size())) {
    fail(Errc::length_mismatch,
         "expected " + std::to_string(space.size()) + " values, got " +
             std::to_string(values.size()));
  }
  const int n = space.size();
  for (int i = 0; i < n; ++i) {
    // The i == j case of the Katetov inequality catches negative values.
    if (values[i] + values[i] < 0) {
      return KatetovCheck{false, i, i, KatetovCheck::Which::katetov};
    }
    for (int j = i + 1; j < n; ++j) {
      const Rational& d = space.dist(i, j);
      if (abs_diff(values[i], values[j]) > d) {
        return KatetovCheck{false, i, j, KatetovCheck::Which::lipschitz};
      }
      if (d > values[i] + values[j]) {
        return KatetovCheck{false, i, j, KatetovCheck::Which::katetov};
      }
    }
  }
  return KatetovCheck{};
}

KatetovFunction katetov_function(SpacePtr space, std::vector<Rational> values) {
  auto verdict = is_katetov(*space, values);
  if (!verdict.ok) {
    fail(Errc::not_katetov,
         std::string(verdict.which == KatetovCheck::Which::lipschitz
                         ? "1-Lipschitz fails"
                         : "Katetov inequality fails") +
             " at (" + space->point_id(verdict.i) + "," + space->point_id(verdict.j) + ")");
  }
  return KatetovFunction{std::move(space), std::move(values)};
}

KatetovFunction katetov_extension(const SubspaceRef& controllers,
                                  const std::vector<Rational>& g) {
  if (controllers.indices.empty()) fail(Errc::empty_subset, "no controllers");
  if (g.size() != controllers.indices.size()) {
    fail(Errc::length_mismatch, "controller values do not match subset size");
  }
  const MetricSpace& space = *controllers.parent;
  // g must itself be admissible on the induced subspace.
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (g[a] < 0) {
      fail(Errc::not_katetov_on_subset,
           "negative value at " + space.point_id(controllers.indices[a]));
    }
    for (std::size_t b = a + 1; b < g.size(); ++b) {
      const Rational& d = space.dist(controllers.indices[a], controllers.indices[b]);
      if (abs_diff(g[a], g[b]) > d || d > g[a] + g[b]) {
        fail(Errc::not_katetov_on_subset,
             "(" + space.point_id(controllers.indices[a]) + "," +
                 space.point_id(controllers.indices[b]) + ")");
      }
    }
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(space.size()));
  for (int x = 0; x < space.size(); ++x) {
    Rational best = g[0] + space.dist(x, controllers.indices[0]);
    for (std::size_t a = 1; a < g.size(); ++a) {
      Rational candidate = g[a] + space.dist(x, controllers.indices[a]);
      if (candidate < best) best = candidate;
    }
    values.push_back(std::move(best));
  }
  return KatetovFunction{controllers.parent, std::move(values)};
}

bool is_controlled_by(const KatetovFunction& f, const SubspaceRef& controllers) {
  std::vector<Rational> restricted;
  restricted.reserve(controllers.indices.size());
  for (int idx : controllers.indices) restricted.push_back(f.at(idx));
  KatetovFunction ext = katetov_extension(controllers, restricted);
  return ext.values == f.values;
}

ControlCertificate control_certificate(KatetovFunction f, SubspaceRef controllers) {
  if (!is_controlled_by(f, controllers)) {
    fail(Errc::not_katetov_on_subset, "function is not controlled by the subset");
  }
  return ControlCertificate{std::move(f), std::move(controllers)};
}

Rational sup_metric(const KatetovFunction& f, const KatetovFunction& g) {
  if (!f.space || !g.space || !f.space->same_geometry(*g.space)) {
    fail(Errc::space_mismatch, "sup metric needs a common space");
  }
  Rational best = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    Rational d = abs_diff(f.values[i], g.values[i]);
    if (d > best) best = d;
  }
  return best;
}

KatetovFunction kuratowski(SpacePtr space, int x) {
  if (x < 0 || x >= space->size()) fail(Errc::unknown_point, "index " + std::to_string(x));
  std::vector<Rational> values = space->row(x);
  return KatetovFunction{std::move(space), std::move(values)};
}

KatetovFunction kuratowski(SpacePtr space, const std::string& id) {
  int x = space->index_of(id);
  return kuratowski(std::move(space), x);
}

SpacePtr one_point_extension(const KatetovFunction& f, const std::string& new_id) {
  const MetricSpace& space = *f.space;
  if (space.has_point(new_id)) fail(Errc::duplicate_point_id, "'" + new_id + "'");
  bool touches_zero = std::any_of(f.values.begin(), f.values.end(),
                                  [](const Rational& v) { return v == 0; });
  const int n = space.size();
  std::vector<std::string> points = space.points();
  points.push_back(new_id);
  std::vector<std::vector<Rational>> dist;
  dist.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> row = space.row(i);
    row.push_back(f.at(i));
    dist.push_back(std::move(row));
  }
  std::vector<Rational> last(f.values);
  last.push_back(Rational(0));
  dist.push_back(std::move(last));
  return MetricSpace::create(std::move(points), std::move(dist),
                             space.pseudometric() || touches_zero);
}

KatetovFunction truncate(const KatetovFunction& f, const Rational& cap) {
  Rational diam = f.space->diameter_all();
  if (cap < diam) {
    fail(Errc::cap_too_small,
         "cap " + format_rational(cap) + " below diameter " + format_rational(diam));
  }
  std::vector<Rational> values;
  values.reserve(f.values.size());
  for (const auto& v : f.values) values.push_back(v > cap ? cap : v);
  return KatetovFunction{f.space, std::move(values)};
}

}  // namespace urykat
