#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kaninj {

enum class ErrorCode {
  duplicate_label,
  cycle_detected,
  unknown_label,
  size_cap_exceeded,
  not_monotone,
  domain_mismatch,
  not_parallel,
  invalid_two_cell,
  not_injective_context,
  not_injective_target,
  quotient_violation,
  not_converged,
  not_lari,
  not_composable,
  square_does_not_commute,
  invariant_violation,
  invalid_argument,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kaninj
