#pragma once

#include <stdexcept>
#include <string>

namespace mexpart {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Enumeration bound or resource cap exceeded.
struct LimitExceededError : Error {
    using Error::Error;
};

// Two series with different coefficient rings were combined.
struct RingMismatchError : Error {
    using Error::Error;
};

// Constant term is not a unit, so the series cannot be inverted.
struct NonUnitError : Error {
    using Error::Error;
};

// rank/crank/parity-rule evaluated where the statistic is undefined.
struct UndefinedStatisticError : Error {
    using Error::Error;
};

// Exponent sum is odd: half-integral weight is out of scope.
struct WeightParityError : Error {
    using Error::Error;
};

// A cusp denominator (or eta argument) that does not divide the level.
struct NonDivisorError : Error {
    using Error::Error;
};

// Leading q-power of an eta-quotient is fractional or negative.
struct ExponentError : Error {
    using Error::Error;
};

// Hecke truncation exhausted, or too small for the requested chain.
struct TruncationError : Error {
    using Error::Error;
};

// Search (e.g. for an admissible level multiplier) hit its cap.
struct SearchCapError : Error {
    using Error::Error;
};

// Fixed-width integer arithmetic overflowed; the run must abort.
struct OverflowError : Error {
    using Error::Error;
};

}  // namespace mexpart
