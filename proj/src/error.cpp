#include "urykat/error.hpp"

namespace urykat {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::asymmetric: return "Asymmetric";
    case Errc::negative_distance: return "NegativeDistance";
    case Errc::triangle_violation: return "TriangleViolation";
    case Errc::zero_distance_distinct: return "ZeroDistanceDistinctPoints";
    case Errc::diagonal_not_zero: return "DiagonalNotZero";
    case Errc::empty_subset: return "EmptySubset";
    case Errc::unknown_point: return "UnknownPoint";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::space_mismatch: return "SpaceMismatch";
    case Errc::not_katetov: return "NotKatetov";
    case Errc::not_katetov_on_subset: return "NotKatetovOnA";
    case Errc::duplicate_point_id: return "DuplicatePointId";
    case Errc::cap_too_small: return "CapTooSmall";
    case Errc::grid_overflow: return "GridOverflow";
    case Errc::size_budget_exceeded: return "SizeBudgetExceeded";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::group_mismatch: return "GroupMismatch";
    case Errc::degenerate_targets: return "DegenerateTargets";
    case Errc::no_admissible_gamma: return "NoAdmissibleGamma";
    case Errc::containment_failure: return "ContainmentFailure";
    case Errc::not_uniformly_discrete: return "NotUniformlyDiscrete";
    case Errc::empty_complement: return "EmptyComplement";
    case Errc::empty_basis: return "EmptyBasis";
    case Errc::no_small_enough_w: return "NoSmallEnoughW";
    case Errc::premise_fails: return "PremiseFails";
    case Errc::construction_failed: return "ConstructionFailed";
    case Errc::parse_error: return "ParseError";
    case Errc::usage_error: return "UsageError";
  }
  return "Unknown";
}

void fail(Errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace urykat
