#include "barrlab/error.hpp"

namespace barrlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonFinitePreserving: return "NonFinitePreserving";
    case ErrorKind::BlowUpGuard: return "BlowUpGuard";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::MissingComponent: return "MissingComponent";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::ZeroObjectViolation: return "ZeroObjectViolation";
    case ErrorKind::NotCauchy: return "NotCauchy";
    case ErrorKind::BoundMismatch: return "BoundMismatch";
    case ErrorKind::NotBiproductCompatible: return "NotBiproductCompatible";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace barrlab
