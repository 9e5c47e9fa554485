#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vqr {

enum class ErrorCode {
  NotHermitian,
  NotPSD,
  TraceNotOne,
  NotUnitary,
  NonProjective,
  DimensionMismatch,
  InvalidOrder,
  InvalidAlpha,
  DomainError,
  OutOfRange,
  NumericalFailure,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every failure in the library is reported through this type. `magnitude`
// carries the size of the violated invariant when one exists (e.g. the most
// negative eigenvalue for NotPSD), and zero otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, double magnitude = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  ErrorCode code_;
  double magnitude_;
};

}  // namespace vqr
