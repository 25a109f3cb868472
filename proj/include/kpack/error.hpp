#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kpack {

enum class ErrorKind {
  DimensionMismatch,
  NonSymmetric,
  SizeMismatch,
  OutOfRange,
  DimensionCap,
  NotACharacter,
  OddParts,
  NotDominant,
  TooManyRows,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` lets the
/// CLI map them onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kpack
