#include "polarc/error.hpp"

namespace polarc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::not_unit_norm: return "NotUnitNorm";
    case Errc::empty_system: return "EmptySystem";
    case Errc::kind_mismatch: return "KindMismatch";
    case Errc::too_large: return "TooLarge";
    case Errc::non_convergence: return "NonConvergence";
    case Errc::zero_sum: return "ZeroSum";
    case Errc::cross_check_failure: return "CrossCheckFailure";
    case Errc::non_positive: return "NonPositive";
    case Errc::too_high_dimensional: return "TooHighDimensional";
    case Errc::bound_violation: return "BoundViolation";
    case Errc::too_close_to_zero_set: return "TooCloseToZeroSet";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::not_found_in_range: return "NotFoundInRange";
    case Errc::not_a_root: return "NotARoot";
    case Errc::zero_direction: return "ZeroDirection";
    case Errc::residual_too_large: return "ResidualTooLarge";
    case Errc::invalid_dimension: return "InvalidDimension";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

bool is_internal(Errc code) noexcept {
  return code == Errc::cross_check_failure || code == Errc::residual_too_large ||
         code == Errc::bound_violation;
}

}  // namespace polarc
