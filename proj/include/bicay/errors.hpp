#pragma once

#include <stdexcept>
#include <string>

namespace bicay {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define BICAY_DEFINE_ERROR(Name)                                  \
  struct Name : Error {                                           \
    explicit Name(const std::string& what) : Error(what) {}       \
  }

BICAY_DEFINE_ERROR(ConductorMismatch);
BICAY_DEFINE_ERROR(ClosureTooLarge);
BICAY_DEFINE_ERROR(InvalidPermutation);
BICAY_DEFINE_ERROR(BadTwist);
BICAY_DEFINE_ERROR(NoSuitablePrime);
BICAY_DEFINE_ERROR(ClusterAmbiguity);
BICAY_DEFINE_ERROR(StructureViolation);
BICAY_DEFINE_ERROR(NoSuchDegree);
BICAY_DEFINE_ERROR(Inconsistent);
BICAY_DEFINE_ERROR(TooLarge);
BICAY_DEFINE_ERROR(ParseError);
BICAY_DEFINE_ERROR(UnknownLabel);
BICAY_DEFINE_ERROR(NotInverseClosed);
BICAY_DEFINE_ERROR(ContainsIdentity);

#undef BICAY_DEFINE_ERROR

}  // namespace bicay
