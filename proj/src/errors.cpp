#include "nullstrata/errors.hpp"

namespace nullstrata {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::JacobiViolation: return "JacobiViolation";
    case ErrorKind::AntisymmetryViolation: return "AntisymmetryViolation";
    case ErrorKind::DegenerateKilling: return "DegenerateKilling";
    case ErrorKind::NotClosedUnderBracket: return "NotClosedUnderBracket";
    case ErrorKind::NotReductive: return "NotReductive";
    case ErrorKind::NoSplitCartan: return "NoSplitCartan";
    case ErrorKind::IrrationalEigenvalues: return "IrrationalEigenvalues";
    case ErrorKind::NotSemisimpleOrIrrational: return "NotSemisimpleOrIrrational";
    case ErrorKind::NotStable: return "NotStable";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::IndefiniteForm: return "IndefiniteForm";
    case ErrorKind::NotInKPerp: return "NotInKPerp";
    case ErrorKind::UnsupportedType: return "UnsupportedType";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::TangentNotInOrbit: return "TangentNotInOrbit";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DegenerateStratumSample: return "DegenerateStratumSample";
    case ErrorKind::TheoremViolationWitness: return "TheoremViolationWitness";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace nullstrata
