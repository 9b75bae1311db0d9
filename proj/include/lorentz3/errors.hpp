#pragma once

#include <stdexcept>
#include <string>

namespace lorentz3 {

// Base for every failure the library reports. `code()` is the stable,
// machine-readable name used in the CLI's JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define LORENTZ3_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                              \
   public:                                                                 \
    explicit Name(const std::string& message) : Error(#Name, message) {}   \
  }

LORENTZ3_DEFINE_ERROR(ParseError);
LORENTZ3_DEFINE_ERROR(NotADerivation);
LORENTZ3_DEFINE_ERROR(CentralIsotropy);
LORENTZ3_DEFINE_ERROR(UnimodularInput);
LORENTZ3_DEFINE_ERROR(NoInvariantMetric);
LORENTZ3_DEFINE_ERROR(DomainError);
LORENTZ3_DEFINE_ERROR(DegeneratePlane);
LORENTZ3_DEFINE_ERROR(StepUnderflow);

#undef LORENTZ3_DEFINE_ERROR

}  // namespace lorentz3
