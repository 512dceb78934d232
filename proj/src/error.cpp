#include "richardson/error.hpp"

namespace richardson {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::NotPalindromic: return "NotPalindromic";
    case ErrorCode::NonPositiveBlock: return "NonPositiveBlock";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::InternalParity: return "InternalParity";
    case ErrorCode::NotTypeA: return "NotTypeA";
    case ErrorCode::NotTypeB: return "NotTypeB";
    case ErrorCode::NotSimpleSpec: return "NotSimpleSpec";
    case ErrorCode::BranchedUnsupported: return "BranchedUnsupported";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::ColumnMismatch: return "ColumnMismatch";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::NonIntegerResult: return "NonIntegerResult";
    case ErrorCode::NotInNilradical: return "NotInNilradical";
    case ErrorCode::InternalDisagreement: return "InternalDisagreement";
    case ErrorCode::Exhausted: return "Exhausted";
    case ErrorCode::NotSimpleSystem: return "NotSimpleSystem";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code) {}

}  // namespace richardson
