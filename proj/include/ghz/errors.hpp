#pragma once

#include <stdexcept>
#include <string>

namespace ghz {

// Base for all library errors. The CLI maps subtypes to distinct exit codes.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input string has wrong length or out-of-range entries (programming error,
// distinct from a promise violation which is a referee-level condition).
struct MalformedInputError : Error {
    using Error::Error;
};

// Input is well-formed but does not satisfy the divisibility promise.
struct PromiseViolationError : Error {
    using Error::Error;
};

// Enumeration or state-vector size exceeds the configured guard.
struct InstanceTooLargeError : Error {
    using Error::Error;
};

// Requested sweep exceeds the elementary-evaluation work bound.
struct WorkBoundExceededError : Error {
    using Error::Error;
};

// Operation only defined for divisor D = 2.
struct UnsupportedDivisorError : Error {
    using Error::Error;
};

// Shared bitstring fails the parity membership condition for S.
struct InvalidSharedStringError : Error {
    using Error::Error;
};

// Parameters outside the regime where the operation's contract holds
// (e.g. the halving predicate needs ceil(n/2) < 2M).
struct OutOfRegimeError : Error {
    using Error::Error;
};

// gcd(D, M) != 1, so no multiplicative inverse of D mod M exists.
struct NoBezoutWitnessError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

}  // namespace ghz
