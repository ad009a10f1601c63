#pragma once

#include <stdexcept>
#include <string>

namespace gsep {

enum class ErrorKind {
  Dimension,
  Index,
  NotPositiveDefinite,
  NonConvergence,
  PairingFailure,
  NegativeDiscriminant,
  Domain,
  InvalidParameter,
  InvalidInput,
  UnphysicalState,
  NoSignChange,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. `kind()` lets callers (the CLI
/// in particular) map failures onto exit codes without a catch per type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define GSEP_DEFINE_ERROR(Name, Kind)                                   \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(ErrorKind::Kind, what) {} \
  };

GSEP_DEFINE_ERROR(DimensionError, Dimension)
GSEP_DEFINE_ERROR(IndexError, Index)
GSEP_DEFINE_ERROR(NotPositiveDefinite, NotPositiveDefinite)
GSEP_DEFINE_ERROR(NonConvergence, NonConvergence)
GSEP_DEFINE_ERROR(PairingFailure, PairingFailure)
GSEP_DEFINE_ERROR(NegativeDiscriminant, NegativeDiscriminant)
GSEP_DEFINE_ERROR(DomainError, Domain)
GSEP_DEFINE_ERROR(InvalidParameter, InvalidParameter)
GSEP_DEFINE_ERROR(InvalidInput, InvalidInput)
GSEP_DEFINE_ERROR(UnphysicalState, UnphysicalState)
GSEP_DEFINE_ERROR(NoSignChange, NoSignChange)

#undef GSEP_DEFINE_ERROR

/// True for failures that indicate numerical breakdown rather than bad input.
inline bool is_numerical_failure(ErrorKind kind) noexcept {
  return kind == ErrorKind::NonConvergence || kind == ErrorKind::PairingFailure ||
         kind == ErrorKind::NegativeDiscriminant;
}

}  // namespace gsep
