#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ulamk {

enum class Errc {
  DuplicateValue,
  OutOfRange,
  LengthMismatch,
  DimensionMismatch,
  ParseError,
  TooLarge,
  WrongDimension,
  MalformedClause,
  SelfLoop,
  NotSquare,
  LevelTooLarge,
  NotFeasible,
  Inconsistent,
  ShrinkNotAllowed,
  BadPosition,
  ShapeMismatch,
  InvalidPath,
  IoError,
  UnknownSuite,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure surfaced by the library. `code()` selects the CLI exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ulamk
