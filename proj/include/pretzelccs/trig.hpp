#pragma once

#include "pretzelccs/numbers.hpp"

namespace pretzel {

/**
 * Certified enclosure of cos(x) for rational x (radians), |x| <= 16, of
 * width at most `target_width`.  Pure rational arithmetic: alternating
 * Taylor series with an explicit remainder bound.
 */
RationalInterval cos_enclosure(const Rat& x, const Rat& target_width);

}  // namespace pretzel
