#pragma once

#include <stdexcept>
#include <string>

namespace degen {

enum class ErrorCode {
  parse,
  io,
  invalid_argument,
  not_a_unit,
  inconsistent,
  singular,
  degree_mixing,
  negative_valuation,
  dimension_mismatch,
  not_jacobi,
  not_associative,
  no_unit,
  not_generated,
  cap_exceeded,
  insufficient_order,
  wrong_leading_term,
  trivial,
  not_rank2_invertible,
  not_a_complex,
  cycle_found,
  bounds_insufficient,
  witness_rejected,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace degen
