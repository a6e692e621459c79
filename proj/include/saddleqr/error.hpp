#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace saddleqr {

enum class ErrorCode {
  dimension_mismatch,
  singular,
  rank_deficient,
  domain,
  hypothesis_violated,
  degenerate_solution,
  parse,
  io,
};

/// Short, stable identifier used in diagnostics and bench `ERR:<code>` cells.
std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace saddleqr
