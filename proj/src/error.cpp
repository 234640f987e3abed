#include "motivic/error.hpp"

namespace motivic {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::OdotUndecidable: return "OdotUndecidable";
    case ErrorKind::DotUndefined: return "DotUndefined";
    case ErrorKind::UnregisteredProduct: return "UnregisteredProduct";
    case ErrorKind::MissingTransport: return "MissingTransport";
    case ErrorKind::NoUnderlyingClass: return "NoUnderlyingClass";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::MissingRestriction: return "MissingRestriction";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::DescentFailure: return "DescentFailure";
    case ErrorKind::OrientationMissing: return "OrientationMissing";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::MissingScissorTable: return "MissingScissorTable";
    case ErrorKind::UnknownDatum: return "UnknownDatum";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::Schema: return "Schema";
    case ErrorKind::Parse: return "Parse";
  }
  return "Error";
}

}  // namespace motivic
