#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <nlohmann/json_fwd.hpp>

namespace urykat {

// Stable error codes surfaced through the CLI reports.
enum class Errc {
  asymmetric,
  negative_distance,
  triangle_violation,
  zero_distance_distinct,
  diagonal_not_zero,
  empty_subset,
  unknown_point,
  length_mismatch,
  space_mismatch,
  not_katetov,
  not_katetov_on_subset,
  duplicate_point_id,
  cap_too_small,
  grid_overflow,
  size_budget_exceeded,
  search_budget_exceeded,
  group_mismatch,
  degenerate_targets,
  no_admissible_gamma,
  containment_failure,
  not_uniformly_discrete,
  empty_complement,
  empty_basis,
  no_small_enough_w,
  premise_fails,
  construction_failed,
  parse_error,
  usage_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }
  const char* code_name() const { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace urykat
