#pragma once

#include <vector>

#include "pretzelccs/polynomial.hpp"

namespace pretzel {

using LaurentMatrix = std::vector<std::vector<LaurentPolynomial>>;

/**
 * Determinant of a square matrix over the Laurent polynomial ring by
 * fraction-free Bareiss elimination.  Every division along the way is
 * exact, so no rational-function arithmetic is needed.
 */
LaurentPolynomial bareiss_det(LaurentMatrix m);

}  // namespace pretzel
