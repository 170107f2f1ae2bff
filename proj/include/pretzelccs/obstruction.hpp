#pragma once

#include <string>
#include <vector>

#include "pretzelccs/pretzel.hpp"
#include "pretzelccs/signature.hpp"

namespace pretzel {

/**
 * The exact ratio F = -8*a2*v3 / (7*a2^2 - a2 - 10*a4).  If the knot
 * admits a pair of chirally cosmetic surgeries along p/q and p/q', then
 * sigma(K,p)/p = F, so p is a multiple of F's denominator and F must fall
 * inside the attainable range (0, 2g] of sigma/p.
 */
struct StrongRatio {
    Rat value;        // F, reduced
    Int numerator;    // -8*a2*v3
    Int denominator;  // 7*a2^2 - a2 - 10*a4
    int denominator_sign;
};

// Throws DegenerateDenominator when 7*a2^2 - a2 - 10*a4 = 0 (the
// criterion is inapplicable and decide() falls back to Inconclusive).
StrongRatio strong_ratio(const PretzelKnot& k);

struct RatioWindow {
    bool pass;  // F in (0, 2g]; fail implies no chirally cosmetic surgery
    Rat lhs;    // scaled |v3| side, in the per-genus normalization below
    Rat rhs;
    Rat slack;  // rhs - lhs; negative iff the window fails (with D > 0)
    bool denominator_nonpositive;
};

/**
 * Window check F in (0, 2g], reported in the sharpest integer form for
 * the genus: 2*a2*|v3| <= D for genus 2, (4/3)*a2*|v3| <= D for genus 3,
 * and (4/g)*a2*|v3| <= D in general, where D = 7*a2^2 - a2 - 10*a4.
 * D <= 0 also fails the window (F would not be positive).
 */
RatioWindow ratio_window_check(const PretzelKnot& k);

struct WeakCheck {
    std::string name;
    bool applicable;
    bool fires;  // firing certifies: no chirally cosmetic surgeries
    Int lhs, rhs;
    bool strict;  // fires iff lhs > rhs (otherwise lhs >= rhs)
};

// The three coarse v3-versus-a2 criteria: 4|v3| >= 7g*a2 for any genus,
// 2|v3| >= 7*a2 - 4 for genus 2, 4|v3| > 21*a2 - 28 for genus 3.
std::vector<WeakCheck> weak_checks(const PretzelKnot& k);

struct TwistSumThreshold {
    bool pass;
    Int s1;
    Int margin;    // 12*s1 - 9*g
    Int margin_sq;  // margin^2
    Int bound;      // 237*g^2
};

/**
 * Exact integer test for s1 >= alpha*g with alpha = (9 + sqrt(237))/12:
 * passes iff 12*s1 - 9*g >= 0 and (12*s1 - 9*g)^2 >= 237*g^2.  A pass
 * certifies the absence of chirally cosmetic surgeries (and forces the
 * general weak check to fire as well).
 */
TwistSumThreshold twist_sum_threshold(const PretzelKnot& k);

// q + q' = -sigma(K,p) / (4*a2), the only slope-sum value compatible
// with a chirally cosmetic pair along p/q and p/q'.
Rat cass_slope_sum(const PretzelKnot& k, const Int& p);

enum class Outcome { NoCCS, Inconclusive, KnownChiral };

std::string outcome_name(Outcome o);

struct Reason {
    std::string criterion;
    std::string detail;  // carries the exact numbers, re-checkable as stated
};

struct Survivor {
    Int p;
    Rat q_plus_qprime;
};

struct Verdict {
    PretzelKnot knot;
    Outcome outcome;
    std::vector<Reason> reasons;
    std::vector<Survivor> survivors;  // nonempty only for Inconclusive
};

/**
 * Full obstruction pipeline, in order: the all-zero lookup (mirror torus
 * knots, known to admit chirally cosmetic surgeries), the weak checks and
 * twist-sum threshold, the ratio window, the certified signature scan of
 * the finitely many admissible p, and slope-sum integrality.  Verdicts
 * are deterministic and the reason chain carries exact numbers.
 */
Verdict decide(const PretzelKnot& k);

// Canonical knots of the given genus with max_twist bounds and twist sum
// in [min_sum, max_sum]; max_twist < 0 means unbounded.  Sorted.
std::vector<PretzelKnot> enumerate_canonical(unsigned genus, unsigned min_sum, unsigned max_sum,
                                             long max_twist = -1);

struct VerifyConfig {
    unsigned genus2_max_sum = 6;
    unsigned genus3_max_sum = 5;
    unsigned threshold_genus_max = 8;
    unsigned threshold_samples = 200;
    unsigned long seed = 20250809;
    unsigned jobs = 1;
};

struct VerifyReport {
    bool ok = false;
    unsigned knots_checked = 0;
    std::vector<std::string> lines;  // sorted, deterministic
};

/**
 * Runs decide over the full genus-2 and genus-3 ranges, the twist-sum
 * threshold sampling, the nine-knot F table, the 52-row sigma/p table,
 * and the p = 5 slope-sum endgame.  Throws TheoremViolation naming the
 * counterexample knot if any required verdict fails to hold.
 */
VerifyReport verify_theorems(const VerifyConfig& config);

}  // namespace pretzel
