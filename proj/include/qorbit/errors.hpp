#pragma once

#include <stdexcept>
#include <string>

namespace qorbit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (negative radicand,
// perfect-square n, zero denominator, non-prime modulus, ...).
struct DomainError : Error {
    using Error::Error;
};

// c does not divide a^2 - n, so (a + sqrt(n))/c is not in Q*(sqrt(n)).
struct MembershipError : Error {
    using Error::Error;
};

// gcd(a, b, c) > 1.
struct PrimitivityError : Error {
    using Error::Error;
};

// Continued-fraction reduction exceeded its iteration cap.  Signals an
// arithmetic bug; never expected on valid input.
struct NonTerminationError : Error {
    using Error::Error;
};

// During a closed-path traversal, zero or both of yx(k), y2x(k) were
// ambiguous.
struct AmbiguityBranchError : Error {
    using Error::Error;
};

// Closed-path traversal did not return to its start within the size of the
// ambiguous set.
struct NonClosureError : Error {
    using Error::Error;
};

} // namespace qorbit
