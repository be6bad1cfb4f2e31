#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "urykat/error.hpp"
#include "urykat/rational.hpp"

namespace urykat {

class MetricSpace;
using SpacePtr = std::shared_ptr<const MetricSpace>;

// First violated metric axiom, with a witness index triple. k is unused for
// pairwise violations.
struct MetricViolation {
  Errc kind = Errc::triangle_violation;
  int i = -1;
  int j = -1;
  int k = -1;
};

// A finite metric (or pseudometric) space with exact rational distances.
// Immutable after construction; share freely.
class MetricSpace {
 public:
  // Validates the axioms and returns the space, or throws Error with the
  // first violation. Point ids must be distinct and nonempty.
  static SpacePtr create(std::vector<std::string> points,
                         std::vector<std::vector<Rational>> dist,
                         bool pseudometric = false);

  // Non-throwing axiom check over a candidate matrix.
  static std::optional<MetricViolation> check(
      const std::vector<std::string>& points,
      const std::vector<std::vector<Rational>>& dist, bool pseudometric);

  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<std::string>& points() const { return points_; }
  const std::string& point_id(int i) const { return points_[static_cast<std::size_t>(i)]; }
  bool pseudometric() const { return pseudometric_; }

  // Index of a point id; throws UnknownPoint.
  int index_of(const std::string& id) const;
  bool has_point(const std::string& id) const;

  const Rational& dist(int i, int j) const {
    return dist_[static_cast<std::size_t>(i) * points_.size() + static_cast<std::size_t>(j)];
  }

  // Full row d(i, -) in point order.
  std::vector<Rational> row(int i) const;

  Rational diameter_all() const;

  // Structural equality: same ids in the same order and the same matrix.
  bool same_geometry(const MetricSpace& other) const;

 private:
  MetricSpace() = default;

  std::vector<std::string> points_;
  std::vector<Rational> dist_;  // row-major n*n
  bool pseudometric_ = false;
};

// A subset of a space's points, kept as strictly increasing positions.
struct SubspaceRef {
  SpacePtr parent;
  std::vector<int> indices;
};

// Builds a SubspaceRef; sorts the indices and rejects duplicates/range errors.
SubspaceRef subspace(SpacePtr parent, std::vector<int> indices);
SubspaceRef subspace_by_ids(SpacePtr parent, const std::vector<std::string>& ids);

// Max pairwise distance within the subset (0 for singletons).
Rational diameter(const SubspaceRef& subset);

// min over a in S of d(x, a).
Rational dist_to_set(const MetricSpace& space, int x, const std::vector<int>& subset_indices);
Rational dist_to_set(const SubspaceRef& subset, int x);

// Distance-preserving injectivity check for an explicit point pairing.
bool is_isometric_map(const MetricSpace& src, const MetricSpace& dst,
                      const std::vector<std::pair<std::string, std::string>>& pairing);

// The induced metric space on a subset (fresh space object).
SpacePtr induced_subspace(const SubspaceRef& subset);

}  // namespace urykat
