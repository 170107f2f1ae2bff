#pragma once

#include <stdexcept>
#include <string>

namespace pretzel {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    using Error::Error;
};

// Twist vector has even length or is empty.
struct BadLength : Error {
    using Error::Error;
};

// Twist vector contains a negative entry.
struct NegativeTwist : Error {
    using Error::Error;
};

// Genus-0 input where a Seifert surface basis is required.
struct UnknotHasNoSurfaceBasis : Error {
    using Error::Error;
};

// gcd(p, p') is nonconstant and vanishes on the requested domain.
struct NonSquarefree : Error {
    using Error::Error;
};

// Fewer real roots than expected were found in the domain.
struct WrongRootCount : Error {
    using Error::Error;
};

// A Laurent polynomial could not be rewritten in the requested basis.
struct RewriteFailure : Error {
    using Error::Error;
};

// The Jones-derivative combination for v3 failed to be an integer.
struct NonIntegerV3 : Error {
    using Error::Error;
};

// Two computation routes for the same invariant disagree.
struct RouteMismatch : Error {
    using Error::Error;
};

// Operation applied to a knot of unsupported genus.
struct WrongGenus : Error {
    using Error::Error;
};

// Queried angle coincides with a root of the Alexander polynomial.
struct OnRoot : Error {
    using Error::Error;
};

// Numeric oracle cannot certify eigenvalue signs at this precision.
struct PrecisionExhausted : Error {
    using Error::Error;
};

// 7*a2^2 - a2 - 10*a4 = 0; the ratio criterion does not apply.
struct DegenerateDenominator : Error {
    using Error::Error;
};

// A verified range produced a verdict contradicting the expected theorem.
struct TheoremViolation : Error {
    using Error::Error;
};

// Recomputed table differs from the golden data shipped in data/.
struct GoldenMismatch : Error {
    using Error::Error;
};

}  // namespace pretzel
