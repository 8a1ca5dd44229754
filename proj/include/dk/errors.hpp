#pragma once

#include <stdexcept>
#include <string>

namespace dk {

  // Every library failure derives from Error so callers (the CLI in
  // particular) can catch one type and still dispatch on the concrete one.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

#define DK_DEFINE_ERROR(Name)           \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  };

  DK_DEFINE_ERROR(OverlapError)
  DK_DEFINE_ERROR(NotReducingError)
  DK_DEFINE_ERROR(AlphabetError)
  DK_DEFINE_ERROR(NotReducedError)
  DK_DEFINE_ERROR(DepthError)
  DK_DEFINE_ERROR(ZeroElementError)
  DK_DEFINE_ERROR(NotInRaError)
  DK_DEFINE_ERROR(DimensionError)
  DK_DEFINE_ERROR(UndecidedError)
  DK_DEFINE_ERROR(SamplerExhausted)
  DK_DEFINE_ERROR(SizeCapError)
  DK_DEFINE_ERROR(ParseError)
  DK_DEFINE_ERROR(RingAxiomError)

#undef DK_DEFINE_ERROR

}  // namespace dk
