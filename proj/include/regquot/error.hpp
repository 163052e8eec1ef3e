#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace regquot {

enum class ErrorKind {
  WindowOverflow,
  WindowTooSmall,
  MixedRings,
  NonHomogeneous,
  EmptySequence,
  NotVerifiedRegular,
  NotRegular,
  ConditionIIFails,
  DegreeMismatch,
  NotWellDefined,
  NotUnital,
  NotInIdeal,
  NotExterior,
  NotCompatible,
  MixedAlgebras,
  MixedCoefficients,
  MixedOwners,
  BoundTooSmall,
  BadIndex,
  InvalidArgument,
  ParseError,
  SemanticError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind` is what
// callers (and the CLI exit-code mapping) dispatch on.
class AlgebraError : public std::runtime_error {
 public:
  AlgebraError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw AlgebraError(kind, what);
}

}  // namespace regquot
