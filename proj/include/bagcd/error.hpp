#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bagcd {

enum class ErrorCode {
  invalid_argument,
  incompatible_weights,
  identically_zero,
  no_finite_roots,
  no_convergence,
  nothing_to_match,
  over_constrained,
  infeasible_constraints,
  not_conjugate_closed,
  invalid_input,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. The code lets
// callers (the CLI in particular) map failures onto exit statuses without
// string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bagcd
