#pragma once

#include <vector>

#include "pretzelccs/polynomial.hpp"

namespace pretzel {

/**
 * Number of distinct real roots of p in the open interval (a, b), by
 * Sturm's theorem.  Requires p(a) != 0 and p(b) != 0.
 */
int count_real_roots(const IntPolynomial& p, const Rat& a, const Rat& b);

/**
 * Isolating intervals for the real roots of p in the open interval
 * `domain`, sorted increasingly.  Each returned interval contains exactly
 * one root, the intervals are pairwise disjoint, and p takes opposite
 * signs at the two endpoints of each.
 *
 * Requires p nonzero at the domain endpoints.  Throws NonSquarefree when
 * gcd(p, p') has a root inside the domain (an in-domain multiple root).
 */
std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p,
                                                 const RationalInterval& domain);

/**
 * Shrink an isolating interval by sign bisection until its width is at
 * most `width`.  The interval must bracket a sign change of p.  Already
 * satisfied widths still shrink to a sub-interval.
 */
RationalInterval refine_interval(const IntPolynomial& p, const RationalInterval& iv,
                                 const Rat& width);

}  // namespace pretzel
