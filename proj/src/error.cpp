#include "vqr/error.hpp"

namespace vqr {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NonProjective: return "NonProjective";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NumericalFailure: return "NumericalFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, double magnitude)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      magnitude_(magnitude) {}

}  // namespace vqr
