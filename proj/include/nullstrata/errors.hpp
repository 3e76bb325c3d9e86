#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nullstrata {

enum class ErrorKind {
  DimensionMismatch,
  JacobiViolation,
  AntisymmetryViolation,
  DegenerateKilling,
  NotClosedUnderBracket,
  NotReductive,
  NoSplitCartan,
  IrrationalEigenvalues,
  NotSemisimpleOrIrrational,
  NotStable,
  ZeroElement,
  IndefiniteForm,
  NotInKPerp,
  UnsupportedType,
  UnsupportedRank,
  TangentNotInOrbit,
  PreconditionViolated,
  DegenerateStratumSample,
  TheoremViolationWitness,
  CapExceeded,
  ParseError,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` names the
// failure class and `what()` carries the diagnostic (offending triple,
// kernel vector, line number, ...).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nullstrata
