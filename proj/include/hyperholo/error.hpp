#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperholo {

enum class ErrorKind {
  zero_divisor,
  pole_singularity,
  real_axis_evaluation,
  mercator_singularity,
  zero_function_value,
  not_single_valued,
  step_too_small,
  parse,
  config,
  region_touches_real_axis,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::zero_divisor: return "zero divisor";
    case ErrorKind::pole_singularity: return "pole singularity";
    case ErrorKind::real_axis_evaluation: return "real-axis evaluation";
    case ErrorKind::mercator_singularity: return "Mercator singularity";
    case ErrorKind::zero_function_value: return "zero function value";
    case ErrorKind::not_single_valued: return "not single-valued on K";
    case ErrorKind::step_too_small: return "step too small";
    case ErrorKind::parse: return "parse error";
    case ErrorKind::config: return "config error";
    case ErrorKind::region_touches_real_axis: return "region touches real axis";
  }
  return "unknown";
}

/// Domain, parse and configuration failures raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperholo
