#include "urykat/metric_space.hpp"

#include <algorithm>
#include <set>

namespace urykat {

std::optional<MetricViolation> MetricSpace::check(
    const std::vector<std::string>& points,
    const std::vector<std::vector<Rational>>& dist, bool pseudometric) {
  const int n = static_cast<int>(points.size());
  for (int i = 0; i < n; ++i) {
    if (dist[static_cast<std::size_t>(i)].size() != points.size()) {
      return MetricViolation{Errc::parse_error, i, -1, -1};
    }
  }
  for (int i = 0; i < n; ++i) {
    if (dist[i][i] != 0) return MetricViolation{Errc::diagonal_not_zero, i, i, -1};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i]) return MetricViolation{Errc::asymmetric, i, j, -1};
      if (dist[i][j] < 0) return MetricViolation{Errc::negative_distance, i, j, -1};
      if (!pseudometric && dist[i][j] == 0) {
        return MetricViolation{Errc::zero_distance_distinct, i, j, -1};
      }
    }
  }
  // d(i,k) <= d(i,j) + d(j,k); with symmetry settled it suffices to scan i<k.
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        if (j == i || j == k) continue;
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          return MetricViolation{Errc::triangle_violation, i, j, k};
        }
      }
    }
  }
  return std::nullopt;
}

SpacePtr MetricSpace::create(std::vector<std::string> points,
                             std::vector<std::vector<Rational>> dist,
                             bool pseudometric) {
  if (points.empty()) fail(Errc::parse_error, "a space needs at least one point");
  if (dist.size() != points.size()) {
    fail(Errc::parse_error, "distance matrix size does not match point count");
  }
  {
    std::set<std::string> seen;
    for (const auto& id : points) {
      if (id.empty()) fail(Errc::parse_error, "empty point id");
      if (!seen.insert(id).second) fail(Errc::duplicate_point_id, "point id '" + id + "'");
    }
  }
  if (auto violation = check(points, dist, pseudometric)) {
    const auto& v = *violation;
    auto name = [&](int idx) { return idx >= 0 ? points[static_cast<std::size_t>(idx)] : std::string("?"); };
    if (v.kind == Errc::triangle_violation) {
      fail(v.kind, "(" + name(v.i) + "," + name(v.j) + "," + name(v.k) + ")");
    }
    fail(v.kind, "(" + name(v.i) + "," + name(v.j) + ")");
  }
  auto space = std::shared_ptr<MetricSpace>(new MetricSpace());
  space->points_ = std::move(points);
  space->pseudometric_ = pseudometric;
  space->dist_.reserve(space->points_.size() * space->points_.size());
  for (const auto& row : dist) {
    for (const auto& v : row) space->dist_.push_back(v);
  }
  return space;
}

int MetricSpace::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i) {
    if (points_[static_cast<std::size_t>(i)] == id) return i;
  }
  fail(Errc::unknown_point, "'" + id + "'");
}

bool MetricSpace::has_point(const std::string& id) const {
  return std::find(points_.begin(), points_.end(), id) != points_.end();
}

std::vector<Rational> MetricSpace::row(int i) const {
  std::vector<Rational> out;
  out.reserve(points_.size());
  for (int j = 0; j < size(); ++j) out.push_back(dist(i, j));
  return out;
}

Rational MetricSpace::diameter_all() const {
  Rational best = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      if (dist(i, j) > best) best = dist(i, j);
    }
  }
  return best;
}

bool MetricSpace::same_geometry(const MetricSpace& other) const {
  return points_ == other.points_ && dist_ == other.dist_;
}

SubspaceRef subspace(SpacePtr parent, std::vector<int> indices) {
  if (!parent) fail(Errc::usage_error, "null space");
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= parent->size()) {
      fail(Errc::unknown_point, "index " + std::to_string(indices[i]));
    }
    if (i > 0 && indices[i] == indices[i - 1]) {
      fail(Errc::duplicate_point_id, "repeated index " + std::to_string(indices[i]));
    }
  }
  return SubspaceRef{std::move(parent), std::move(indices)};
}

SubspaceRef subspace_by_ids(SpacePtr parent, const std::vector<std::string>& ids) {
  std::vector<int> indices;
  indices.reserve(ids.size());
  for (const auto& id : ids) indices.push_back(parent->index_of(id));
  return subspace(std::move(parent), std::move(indices));
}

Rational diameter(const SubspaceRef& subset) {
  if (subset.indices.empty()) fail(Errc::empty_subset, "diameter of empty subset");
  Rational best = 0;
  for (std::size_t a = 0; a < subset.indices.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.indices.size(); ++b) {
      const Rational& d = subset.parent->dist(subset.indices[a], subset.indices[b]);
      if (d > best) best = d;
    }
  }
  return best;
}

Rational dist_to_set(const MetricSpace& space, int x, const std::vector<int>& subset_indices) {
  if (subset_indices.empty()) fail(Errc::empty_subset, "distance to empty subset");
  Rational best = space.dist(x, subset_indices[0]);
  for (std::size_t a = 1; a < subset_indices.size(); ++a) {
    const Rational& d = space.dist(x, subset_indices[a]);
    if (d < best) best = d;
  }
  return best;
}

Rational dist_to_set(const SubspaceRef& subset, int x) {
  return dist_to_set(*subset.parent, x, subset.indices);
}

bool is_isometric_map(const MetricSpace& src, const MetricSpace& dst,
                      const std::vector<std::pair<std::string, std::string>>& pairing) {
  std::vector<int> from;
  std::vector<int> to;
  from.reserve(pairing.size());
  to.reserve(pairing.size());
  for (const auto& [s, t] : pairing) {
    from.push_back(src.index_of(s));
    to.push_back(dst.index_of(t));
  }
  for (std::size_t a = 0; a < from.size(); ++a) {
    for (std::size_t b = a + 1; b < from.size(); ++b) {
      if (from[a] == from[b]) return false;  // not a function
      if (to[a] == to[b]) return false;      // not injective
      if (src.dist(from[a], from[b]) != dst.dist(to[a], to[b])) return false;
    }
  }
  return true;
}

SpacePtr induced_subspace(const SubspaceRef& subset) {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> dist;
  points.reserve(subset.indices.size());
  for (int idx : subset.indices) points.push_back(subset.parent->point_id(idx));
  for (int a : subset.indices) {
    std::vector<Rational> row;
    row.reserve(subset.indices.size());
    for (int b : subset.indices) row.push_back(subset.parent->dist(a, b));
    dist.push_back(std::move(row));
  }
  return MetricSpace::create(std::move(points), std::move(dist), subset.parent->pseudometric());
}

}  // namespace urykat
