#pragma once

#include <stdexcept>
#include <string>

namespace skewpair {

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define SKEWPAIR_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

SKEWPAIR_DEFINE_ERROR(UnsupportedPrime);
SKEWPAIR_DEFINE_ERROR(ZeroInversion);
SKEWPAIR_DEFINE_ERROR(BadExponent);
SKEWPAIR_DEFINE_ERROR(InternalError);
SKEWPAIR_DEFINE_ERROR(NotInvertible);
SKEWPAIR_DEFINE_ERROR(Singular);
SKEWPAIR_DEFINE_ERROR(DegeneratePair);
SKEWPAIR_DEFINE_ERROR(InvalidPair);
SKEWPAIR_DEFINE_ERROR(ParamMismatch);
SKEWPAIR_DEFINE_ERROR(SlotSingular);
SKEWPAIR_DEFINE_ERROR(NotScalar);
SKEWPAIR_DEFINE_ERROR(NoSolution);
SKEWPAIR_DEFINE_ERROR(ParseError);

#undef SKEWPAIR_DEFINE_ERROR

}  // namespace skewpair
