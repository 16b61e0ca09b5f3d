#pragma once

#include <stdexcept>

namespace dlcodes {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define DLCODES_DEFINE_ERROR(NAME)                                            \
    class NAME : public Error {                                               \
      public:                                                                 \
        using Error::Error;                                                   \
    }

DLCODES_DEFINE_ERROR(NonPrimeCharacteristic);
DLCODES_DEFINE_ERROR(ReducibleModulus);
DLCODES_DEFINE_ERROR(DegreeMismatch);
DLCODES_DEFINE_ERROR(DivisionByZero);
DLCODES_DEFINE_ERROR(FieldMismatch);
DLCODES_DEFINE_ERROR(InvalidFrobeniusBase);
DLCODES_DEFINE_ERROR(ArityMismatch);
DLCODES_DEFINE_ERROR(IndexOutOfRange);
DLCODES_DEFINE_ERROR(NonDivisibleCount);
DLCODES_DEFINE_ERROR(UnsupportedFamilyForClosedForm);
DLCODES_DEFINE_ERROR(InsufficientVanishing);
DLCODES_DEFINE_ERROR(HypothesisViolation);
DLCODES_DEFINE_ERROR(RankDeficient);
DLCODES_DEFINE_ERROR(UnsupportedTwist);
DLCODES_DEFINE_ERROR(MissingIntersectionNumber);
DLCODES_DEFINE_ERROR(BudgetExceeded);
DLCODES_DEFINE_ERROR(FileFormatError);

#undef DLCODES_DEFINE_ERROR

}  // namespace dlcodes
