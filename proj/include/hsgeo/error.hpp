#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hsgeo {

enum class ErrorKind {
  InvalidArgument,
  GridTooSmall,
  GridMismatch,
  NotIntegrable,
  TailNotSettled,
  TailTooLarge,
  RangeExceedsWindow,
  DerivativeTooSmall,
  InvalidClass,
  ConstraintViolated,
  BranchCutAmbiguity,
  PastBlowup,
  SolitonBlowup,
  WindowTooSmall,
  AntipodalPoints,
  PositivityLost,
  Breakdown,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the
/// machine-readable category, `what()` a human-readable message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hsgeo
