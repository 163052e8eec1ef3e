#include "regquot/error.hpp"

namespace regquot {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::WindowOverflow: return "WindowOverflow";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::MixedRings: return "MixedRings";
    case ErrorKind::NonHomogeneous: return "NonHomogeneous";
    case ErrorKind::EmptySequence: return "EmptySequence";
    case ErrorKind::NotVerifiedRegular: return "NotVerifiedRegular";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::ConditionIIFails: return "ConditionIIFails";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::NotExterior: return "NotExterior";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::MixedAlgebras: return "MixedAlgebras";
    case ErrorKind::MixedCoefficients: return "MixedCoefficients";
    case ErrorKind::MixedOwners: return "MixedOwners";
    case ErrorKind::BoundTooSmall: return "BoundTooSmall";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

}  // namespace regquot
