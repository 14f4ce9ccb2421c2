#pragma once

#include <stdexcept>
#include <string>

namespace iet {

// Base of every domain error raised by the library. The CLI maps these to
// exit code 1; anything else escaping is a usage or I/O problem.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define IET_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

IET_DEFINE_ERROR(MixedFieldError)
IET_DEFINE_ERROR(ParseError)
IET_DEFINE_ERROR(LengthSumError)
IET_DEFINE_ERROR(NonPositiveLength)
IET_DEFINE_ERROR(AlphabetMismatch)
IET_DEFINE_ERROR(OutOfDomain)
IET_DEFINE_ERROR(NotRegularToDepth)
IET_DEFINE_ERROR(NoFixpoint)
IET_DEFINE_ERROR(NotPrimitive)
IET_DEFINE_ERROR(TruncationTooShort)
IET_DEFINE_ERROR(NotBifix)
IET_DEFINE_ERROR(NotSMaximal)
IET_DEFINE_ERROR(NotDecodable)
IET_DEFINE_ERROR(EmptyGraph)
IET_DEFINE_ERROR(NotTransitive)
IET_DEFINE_ERROR(IoError)

#undef IET_DEFINE_ERROR

}  // namespace iet
