#include "pretzelccs/invariants.hpp"

namespace pretzel {

namespace {

// Bracket of a vertical 2-strand tangle with c identical crossings, as a
// vector (a, b) over the two planar pairings: a on the identity pairing,
// b on the cup-cap pairing.  One crossing contributes A on the identity
// and A^{-1} on the cup-cap; stacking composes in the Temperley-Lieb
// algebra, where cup-cap * cup-cap closes a loop worth delta.
struct TangleBracket {
    LaurentPolynomial a, b;
};

TangleBracket strand_bracket(long crossings, const LaurentPolynomial& delta) {
    const LaurentPolynomial A = LaurentPolynomial::monomial(1, 1);
    const LaurentPolynomial A_inv = LaurentPolynomial::monomial(-1, 1);
    TangleBracket t{LaurentPolynomial::monomial(0, 1), LaurentPolynomial{}};
    for (long i = 0; i < crossings; ++i) {
        LaurentPolynomial a_next = t.a * A;
        LaurentPolynomial b_next = t.a * A_inv + t.b * A + t.b * A_inv * delta;
        t.a = std::move(a_next);
        t.b = std::move(b_next);
    }
    return t;
}

}  // namespace

JonesPolynomial jones_polynomial(const PretzelKnot& k) {
    const LaurentPolynomial delta =
        -(LaurentPolynomial::monomial(2, 1) + LaurentPolynomial::monomial(-2, 1));

    // Pretzel closure: with any nonempty subset of strands left on the
    // identity pairing the state has exactly |subset| loops, and with all
    // strands on the cup-cap pairing it has two.  Summing over states:
    //   <P> = (prod(a_i*delta + b_i) - prod(b_i)) / delta + delta*prod(b_i)
    LaurentPolynomial prod_mixed = LaurentPolynomial::monomial(0, 1);
    LaurentPolynomial prod_b = LaurentPolynomial::monomial(0, 1);
    for (long twist : k.twists()) {
        TangleBracket t = strand_bracket(2 * twist + 1, delta);
        prod_mixed = prod_mixed * (t.a * delta + t.b);
        prod_b = prod_b * t.b;
    }
    LaurentPolynomial bracket = (prod_mixed - prod_b).divide_exact(delta) + delta * prod_b;

    // All crossings are negative, so the writhe is minus the crossing
    // count and the normalization is (-A^3)^{crossings}.
    Int crossings = crossing_number(k);
    if (k.is_unknot()) crossings = 2 * Int(k.twists()[0]) + 1;
    if (!crossings.fits_slong_p()) throw Error("jones_polynomial: twist parameters too large");
    const long c = crossings.get_si();
    LaurentPolynomial v_in_a = bracket * LaurentPolynomial::monomial(3 * c, (c % 2) ? Int(-1) : Int(1));

    // t = A^{-4}; every surviving exponent must be a multiple of 4.
    LaurentPolynomial v_in_t = v_in_a.collapse_exponents(-4);
    if (v_in_t.evaluate_at_one() != 1)
        throw Error("Jones polynomial normalization failed for " + k.to_string() + ": V(1) = " +
                    v_in_t.evaluate_at_one().get_str());
    return JonesPolynomial{std::move(v_in_t)};
}

}  // namespace pretzel
