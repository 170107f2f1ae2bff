#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pretzelccs/polynomial.hpp"
#include "pretzelccs/pretzel.hpp"

namespace pretzel {

/**
 * Conway polynomial of a knot: 1 + a2*z^2 + a4*z^4 + ... .  Constant term
 * 1 and even powers only, enforced at construction.
 */
class ConwayPolynomial {
  public:
    explicit ConwayPolynomial(IntPolynomial z_poly);

    const IntPolynomial& poly() const { return poly_; }
    Int a2j(unsigned j) const { return poly_.coeff(2 * j); }
    unsigned half_degree() const { return static_cast<unsigned>(poly_.degree()) / 2; }
    bool operator==(const ConwayPolynomial& o) const { return poly_ == o.poly_; }

  private:
    IntPolynomial poly_;
};

/**
 * Exact determinant route: det(x*A - x^{-1}*A^T) over the Laurent ring in
 * x = t^{1/2}, rewritten in z = x - x^{-1}.  The rewrite must terminate
 * with zero remainder (RewriteFailure otherwise, which would indicate a
 * Seifert-matrix bug).  The unknot yields 1.
 */
ConwayPolynomial conway_polynomial(const PretzelKnot& k);

// Coefficient of z^{2j} (0 beyond the degree).
Int a2j_from_conway(const ConwayPolynomial& c, unsigned j);

// Closed forms in the elementary symmetric polynomials of the twist
// vector: a2 = g(g+1)/2 + g*s1 + s2 and the matching cubic form for v3.
// Both give 0 for the unknot.
Int a2_closed(const PretzelKnot& k);
Int v3_closed(const PretzelKnot& k);

// a4 = 1 + s1 + s2 + s3 + s4 for genus 2 (WrongGenus otherwise).
Int a4_closed_genus2(const PretzelKnot& k);

struct Genus3Coefficients {
    Int a2, a4, a6;
};

// Genus-3 closed forms, with every s_i taken in all seven twist
// parameters (validated against the determinant route).
Genus3Coefficients a2_a4_a6_closed_genus3(const PretzelKnot& k);

/**
 * v3 by unwinding the twists strand by strand through the crossing-change
 * recursion v3(K+) - v3(K-) = (a2(K+) + a2(K-) + lk^2)/2, with both
 * resolution components unknots, bottoming out at v3(unknot) = 0 via the
 * two-crossing genus reduction K(k1,...,k_{2g-1},0,0) -> K(k1,...,k_{2g-1}).
 */
Int v3_skein(const PretzelKnot& k);

struct JonesPolynomial {
    LaurentPolynomial in_t;
};

/**
 * Kauffman-bracket computation on the standard alternating diagram
 * (2*sum(k_i) + 2g + 1 negative crossings).  Each strand is a 2-strand
 * tangle whose bracket is carried as a 2-vector over the planar pairings
 * and advanced crossing by crossing; the strand vectors compose around
 * the pretzel closure and the writhe normalization lands in t = A^{-4}.
 */
JonesPolynomial jones_polynomial(const PretzelKnot& k);

// v3 = -(1/36) V'''(1) - (1/12) V''(1); always an integer for knots, so a
// noninteger result throws NonIntegerV3.
Rat v3_from_jones(const PretzelKnot& k);

struct InvariantSet {
    PretzelKnot knot;
    ConwayPolynomial conway;
    Int a2;
    std::optional<Int> a4;  // present for genus >= 2
    std::optional<Int> a6;  // present for genus >= 3
    Int v3;
    // value name -> routes that produced and confirmed it, primary first
    std::map<std::string, std::vector<std::string>> routes;

    // All-negative mirror: a_{2j} unchanged, v3 negated.
    Int mirror_v3() const { return -v3; }
};

// Computes every applicable route and cross-checks them; throws
// RouteMismatch naming the two routes and values on any disagreement.
InvariantSet full_invariants(const PretzelKnot& k);

}  // namespace pretzel
