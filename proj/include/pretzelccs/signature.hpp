#pragma once

#include <vector>

#include "pretzelccs/invariants.hpp"
#include "pretzelccs/pretzel.hpp"

namespace pretzel {

/**
 * Certified description of the Tristram-Levine signature function of an
 * alternating odd pretzel knot.
 *
 * The Alexander roots of this family lie on the unit circle at angles
 * 0 < theta_1 < ... < theta_g < pi.  On the arc from 1 to -1 the
 * signature function starts at 0 and jumps by +2 at each theta_m, ending
 * at 2g.  Substituting w = z^2 = 2*cos(theta) - 2 turns the Conway
 * polynomial into q(w) = 1 + a2*w + ... + a_{2g}*w^g whose g simple roots
 * in (-4, 0) correspond to the angles; all certified queries work on
 * rational isolating intervals for those roots.
 *
 * Refinement shrinks the stored intervals in place, so a profile is not
 * safe for concurrent use; each thread takes its own copy (copy-on-refine).
 */
struct SignatureProfile {
    unsigned genus = 0;
    IntPolynomial wpoly;                    // q(w)
    std::vector<RationalInterval> roots_w;  // index m: (m+1)-th smallest angle; w decreasing
};

// Builds the profile.  Throws WrongGenus for the unknot, NonSquarefree if
// q has an in-domain multiple root, WrongRootCount if fewer than g roots
// lie in (-4, 0).
SignatureProfile signature_profile(const PretzelKnot& k);

/**
 * Order of theta_m against the angle 2*pi*frac, frac in [0, 1/2] a
 * rational fraction of a full turn: +1 if theta_m > angle, -1 if
 * theta_m < angle, 0 if the angle hits the Alexander root exactly
 * (decided exactly through the minimal polynomial of 2*cos(2*pi*frac)).
 */
int compare_root_to_turn_fraction(SignatureProfile& profile, unsigned m, const Rat& frac);

struct AngleFloor {
    Int floor;        // floor(theta_m * p / (2*pi))
    bool coincident;  // theta_m * p / (2*pi) is exactly an integer
};

AngleFloor floor_angle_multiple(SignatureProfile& profile, unsigned m, const Int& p);

// Certified rational enclosure of theta_m (radians), of width <= width.
RationalInterval theta_interval(SignatureProfile& profile, unsigned m, const Rat& width);

// Signature at omega = exp(i * pi_multiple * pi), pi_multiple in [0, 1]:
// returns 2 * #{m : theta_m < angle}.  Throws OnRoot when the query angle
// is an Alexander root.
int signature_at_angle(SignatureProfile& profile, const Rat& pi_multiple);

// Same, for a query angle certified by a rational interval (radians).
// Throws OnRoot if the interval straddles an Alexander root angle.
int signature_at_angle(SignatureProfile& profile, const RationalInterval& radians);

struct PSignature {
    Int p;
    Int value;
    bool coincidence;  // some p-th root of unity hit an Alexander root
};

/**
 * p-signature sigma(K, p) = sum of the signature function over all p-th
 * roots of unity ~ sum_m 2*(p - 2*floor(theta_m*p/2pi) - 1).  When a root
 * of unity lands exactly on an Alexander root the average-of-limits
 * convention applies (that term becomes 2*(p - 2*floor)) and the
 * coincidence flag is set.
 */
PSignature p_signature(SignatureProfile& profile, const Int& p);
PSignature p_signature(const PretzelKnot& k, const Int& p);

/**
 * Independent numeric oracle: signature of the Hermitian matrix
 * (1-omega)A + (1-conj(omega))A^T at omega = exp(i*angle), by eigenvalue
 * sign counts with a relative-precision guard.  Throws PrecisionExhausted
 * when an eigenvalue cannot be certified nonzero; the caller must keep
 * omega away from Alexander roots.
 */
int hermitian_signature_oracle(const PretzelKnot& k, double angle);

struct SigmaRow {
    Int p;
    Int sigma;
    Rat ratio;  // sigma / p, reduced
    bool coincidence;
};

// Exact table of sigma(K,p)/p for p = 1..pmax; parallelizes over p when
// jobs > 1 (each worker refines its own profile copy).
std::vector<SigmaRow> sigma_ratio_table(const PretzelKnot& k, unsigned pmax, unsigned jobs = 1);

/**
 * Certified upper bound for L = sum_m 2*(1 - theta_m/pi), the limit of
 * sigma(K,p)/p: computes floors on a grid of `scale` turn fractions, so
 * the bound exceeds L by less than 4g/scale.
 */
Rat signature_density_upper_bound(SignatureProfile& profile, const Int& scale);

}  // namespace pretzel
