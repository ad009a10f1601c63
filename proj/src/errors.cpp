#include "gsep/errors.hpp"

namespace gsep {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Dimension: return "DimensionError";
    case ErrorKind::Index: return "IndexError";
    case ErrorKind::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::PairingFailure: return "PairingFailure";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::UnphysicalState: return "UnphysicalState";
    case ErrorKind::NoSignChange: return "NoSignChange";
  }
  return "Error";
}

}  // namespace gsep
