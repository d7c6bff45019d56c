#pragma once

#include <stdexcept>
#include <string>

namespace v19 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define V19_DEFINE_ERROR(Name)                                        \
  class Name : public Error {                                         \
   public:                                                            \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  };

V19_DEFINE_ERROR(DegenerateParameter)
V19_DEFINE_ERROR(ZeroArgument)
V19_DEFINE_ERROR(TooLarge)
V19_DEFINE_ERROR(OmegaZero)
V19_DEFINE_ERROR(DegenerateSample)
V19_DEFINE_ERROR(NonUniqueSolution)
V19_DEFINE_ERROR(NormalizationFailure)
V19_DEFINE_ERROR(BackendMismatch)
V19_DEFINE_ERROR(NonInvertible)
V19_DEFINE_ERROR(InvariantViolation)
V19_DEFINE_ERROR(ConfigError)
V19_DEFINE_ERROR(IoError)
V19_DEFINE_ERROR(ParseError)

#undef V19_DEFINE_ERROR

}  // namespace v19
