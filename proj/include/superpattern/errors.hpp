#pragma once

#include <stdexcept>
#include <string>

namespace superpattern {

// Base class for every error raised by the library.  The C API translates
// these into status codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define SUPERPATTERN_ERROR(Name)          \
  struct Name : Error {                   \
    using Error::Error;                   \
  };

SUPERPATTERN_ERROR(InputError)
SUPERPATTERN_ERROR(CycleError)
SUPERPATTERN_ERROR(UnknownAtomError)
SUPERPATTERN_ERROR(OverlapError)
SUPERPATTERN_ERROR(MixedReferenceError)
SUPERPATTERN_ERROR(NotAnIntervalError)
SUPERPATTERN_ERROR(NotAntichainError)
SUPERPATTERN_ERROR(NotSubposetError)
SUPERPATTERN_ERROR(NotCoIdealError)
SUPERPATTERN_ERROR(SizeCapError)
SUPERPATTERN_ERROR(NotComparableError)
SUPERPATTERN_ERROR(DivideByZeroError)
SUPERPATTERN_ERROR(PoleError)
SUPERPATTERN_ERROR(AtomMismatchError)
SUPERPATTERN_ERROR(NotAtomicError)
SUPERPATTERN_ERROR(NotNormalError)

#undef SUPERPATTERN_ERROR

}  // namespace superpattern
