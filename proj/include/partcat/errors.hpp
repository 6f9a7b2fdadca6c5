#pragma once

#include <stdexcept>
#include <string>

namespace partcat {

// Domain errors carry a stable code so the CLI can report them as JSON.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define PARTCAT_ERROR(Name)                                   \
  class Name : public Error {                                 \
   public:                                                    \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  };

PARTCAT_ERROR(PoleAtPoint)
PARTCAT_ERROR(NotAUnit)
PARTCAT_ERROR(DuplicateAbscissa)
PARTCAT_ERROR(OrderMismatch)
PARTCAT_ERROR(ResourceLimit)
PARTCAT_ERROR(ArityMismatch)
PARTCAT_ERROR(ArityTooSmall)
PARTCAT_ERROR(ParseError)
PARTCAT_ERROR(CutoffTooSmall)
PARTCAT_ERROR(TrivialClass)
PARTCAT_ERROR(ParameterMismatch)
PARTCAT_ERROR(MinimalClass)
PARTCAT_ERROR(NotIdempotent)
PARTCAT_ERROR(OrderTooSmall)
PARTCAT_ERROR(SeparationFailure)
PARTCAT_ERROR(InternalError)

#undef PARTCAT_ERROR

}  // namespace partcat
