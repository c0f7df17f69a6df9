#pragma once

#include <stdexcept>
#include <string>

namespace cobord2 {

/// Domain error categories. `name()` strings are part of the CLI contract
/// (printed verbatim before the message).
enum class ErrorKind {
  NotAssociative,
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  ClosureTooLarge,
  UnknownName,
  ParameterTooLarge,
  UnitFails,
  DimensionMismatch,
  DegenerateForm,
  NotCommutative,
  IndexOutOfRange,
  InternalInconsistency,
  WorkLimitExceeded,
  SyntaxError,
  ArityMismatch,
  NotSemisimple,
  CriterionDisagreement,
  ParseError,
  InvalidArgument,
};

const char* error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

}  // namespace cobord2
