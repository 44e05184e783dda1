#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polarc {

enum class Errc {
  dimension_mismatch,
  not_unit_norm,
  empty_system,
  kind_mismatch,
  too_large,
  non_convergence,
  zero_sum,
  cross_check_failure,
  non_positive,
  too_high_dimensional,
  bound_violation,
  too_close_to_zero_set,
  invalid_params,
  not_found_in_range,
  not_a_root,
  zero_direction,
  residual_too_large,
  invalid_dimension,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

/// True for codes that indicate a broken internal identity rather than bad input.
bool is_internal(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace polarc
