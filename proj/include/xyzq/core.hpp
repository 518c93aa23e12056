#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace xyzq {

using Int = mpz_class;
using Rational = mpq_class;

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  IndexOutOfRange,
  InvalidParameter,
  EmptyEdgeSet,
  ParseError,
  DimensionMismatch,
  NotSquare,
  NotDivisible,
  DegreeMismatch,
  PreconditionViolated,
  IrregularGraph,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the verification harness, the CLI exit-code mapping) can switch
/// on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xyzq
