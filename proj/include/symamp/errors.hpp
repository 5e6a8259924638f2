#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace symamp {

// Base class for all library errors. `name()` is the stable identifier the
// CLI prints on numerical failures (exit code 3).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define SYMAMP_DEFINE_ERROR(NAME)                   \
  struct NAME : Error {                             \
    explicit NAME(const std::string& message)       \
        : Error(#NAME, message) {}                  \
  }

SYMAMP_DEFINE_ERROR(InvalidSpectrum);
SYMAMP_DEFINE_ERROR(ImaginaryResidueTooLarge);
SYMAMP_DEFINE_ERROR(NotCirculant);
SYMAMP_DEFINE_ERROR(LengthMismatch);
SYMAMP_DEFINE_ERROR(SolverFailure);
SYMAMP_DEFINE_ERROR(InvalidResidual);
SYMAMP_DEFINE_ERROR(DegenerateP);
SYMAMP_DEFINE_ERROR(OutOfRegime);
SYMAMP_DEFINE_ERROR(UnknownScenario);

#undef SYMAMP_DEFINE_ERROR

}  // namespace symamp
