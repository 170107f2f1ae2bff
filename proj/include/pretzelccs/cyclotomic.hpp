#pragma once

#include "pretzelccs/polynomial.hpp"

namespace pretzel {

// n-th cyclotomic polynomial, cached and thread-safe.
IntPolynomial cyclotomic(unsigned n);

/**
 * Minimal polynomial over Q of y = 2*cos(2*pi/n), monic with integer
 * coefficients.  Its roots are exactly 2*cos(2*pi*a/n) for a coprime to n.
 */
IntPolynomial cos_two_pi_minimal_poly(unsigned n);

// Minimal polynomial of w = 2*cos(2*pi/n) - 2 (substitutes y = w + 2).
IntPolynomial shifted_cos_minimal_poly(unsigned n);

}  // namespace pretzel
