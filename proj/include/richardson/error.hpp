#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace richardson {

enum class ErrorCode {
  SumMismatch,
  NotPalindromic,
  NonPositiveBlock,
  InvalidSize,
  ShapeMismatch,
  InternalParity,
  NotTypeA,
  NotTypeB,
  NotSimpleSpec,
  BranchedUnsupported,
  NotInAlgebra,
  ColumnMismatch,
  NotNilpotent,
  NonIntegerResult,
  NotInNilradical,
  InternalDisagreement,
  Exhausted,
  NotSimpleSystem,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace richardson
