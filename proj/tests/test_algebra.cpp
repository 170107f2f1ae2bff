#include <doctest.h>

#include <random>

#include "pretzelccs/cyclotomic.hpp"
#include "pretzelccs/determinant.hpp"
#include "pretzelccs/roots.hpp"
#include "pretzelccs/trig.hpp"

using namespace pretzel;

namespace {

// Cofactor-expansion determinant, the independent oracle for Bareiss.
LaurentPolynomial cofactor_det(const LaurentMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPolynomial::monomial(0, 1);
    if (n == 1) return m[0][0];
    LaurentPolynomial det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        LaurentMatrix minor(n - 1, std::vector<LaurentPolynomial>(n - 1));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor[r - 1][cc++] = m[r][c];
        LaurentPolynomial term = m[0][j] * cofactor_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

IntPolynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("integer polynomial ring arithmetic") {
    IntPolynomial one_plus_z2 = poly({1, 0, 1});
    CHECK(one_plus_z2 * one_plus_z2 == poly({1, 0, 2, 0, 1}));

    // V = -t^4 + t^3 + t (right trefoil Jones); V''(1) = -6 by hand.
    IntPolynomial v = poly({0, 1, 0, 1, -1});
    CHECK(v.derivative().derivative().evaluate(Int(1)) == -6);

    CHECK(poly({1, 0, 5, 0, 2}).evaluate(Rat(0)) == 1);

    IntPolynomial a = poly({2, -3, 1});  // (x-1)(x-2)
    CHECK(a.divide_exact(poly({-1, 1})) == poly({-2, 1}));
    CHECK_THROWS_AS(poly({1, 1}).divide_exact(poly({0, 0, 1})), Error);

    // Leibniz rule on random pairs.
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Int> ca(4), cb(5);
        for (auto& c : ca) c = coeff(rng);
        for (auto& c : cb) c = coeff(rng);
        IntPolynomial p{std::vector<Int>(ca)}, q{std::vector<Int>(cb)};
        CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
    }
}

TEST_CASE("Laurent polynomials and the z-rewrite") {
    LaurentPolynomial x = LaurentPolynomial::monomial(1, 1);
    LaurentPolynomial xinv = LaurentPolynomial::monomial(-1, 1);
    LaurentPolynomial sym = x * x - LaurentPolynomial::monomial(0, 1) + xinv * xinv;
    // x^2 - 1 + x^-2 = z^2 + 1 under z = x - x^-1
    CHECK(sym.to_polynomial_in(-1) == poly({1, 0, 1}));
    // and y^2 - 3 under y = x + x^-1
    CHECK(sym.to_polynomial_in(+1) == poly({-3, 0, 1}));
    CHECK_THROWS_AS((x + LaurentPolynomial::monomial(0, 1)).to_polynomial_in(-1), RewriteFailure);

    CHECK((x - xinv).divide_exact(x - xinv) == LaurentPolynomial::monomial(0, 1));
    LaurentPolynomial prod = (x - xinv) * (x + xinv) * (x + xinv);
    CHECK(prod.divide_exact(x + xinv) == (x - xinv) * (x + xinv));

    CHECK(LaurentPolynomial::monomial(-8, 3).collapse_exponents(-4) ==
          LaurentPolynomial::monomial(2, 3));
    CHECK_THROWS_AS(LaurentPolynomial::monomial(-7, 3).collapse_exponents(-4), Error);
}

TEST_CASE("bareiss determinant matches the examples") {
    LaurentPolynomial x = LaurentPolynomial::monomial(1, 1);
    LaurentPolynomial xinv = LaurentPolynomial::monomial(-1, 1);

    CHECK(bareiss_det({{x - xinv}}) == x - xinv);

    LaurentMatrix id4(4, std::vector<LaurentPolynomial>(4));
    for (int i = 0; i < 4; ++i) id4[i][i] = LaurentPolynomial::monomial(0, 1);
    CHECK(bareiss_det(id4) == LaurentPolynomial::monomial(0, 1));

    // x*A - x^-1*A^T for A = [[1,0],[1,1]]: det = x^2 - 1 + x^-2
    LaurentMatrix m(2, std::vector<LaurentPolynomial>(2));
    m[0][0] = x - xinv;
    m[0][1] = -xinv;
    m[1][0] = x;
    m[1][1] = x - xinv;
    LaurentPolynomial det = bareiss_det(m);
    CHECK(det == x * x - LaurentPolynomial::monomial(0, 1) + xinv * xinv);
    CHECK(det.to_polynomial_in(-1) == poly({1, 0, 1}));
}

TEST_CASE("bareiss equals cofactor expansion on random matrices") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> coeff(-3, 3);
    std::uniform_int_distribution<long> expo(-2, 2);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < (n <= 4 ? 20 : 6); ++trial) {
            LaurentMatrix m(n, std::vector<LaurentPolynomial>(n));
            for (auto& row : m)
                for (auto& e : row)
                    for (int t = 0; t < 2; ++t)
                        e = e + LaurentPolynomial::monomial(expo(rng), coeff(rng));
            CHECK(bareiss_det(m) == cofactor_det(m));
        }
    }
}

TEST_CASE("root isolation on the knot-derived polynomials") {
    RationalInterval domain{Rat(-4), Rat(0)};

    auto one = isolate_real_roots(poly({1, 1}), domain);  // w + 1
    REQUIRE(one.size() == 1);
    CHECK(one[0].contains(Rat(-1)));

    // 1 + 5w + 2w^2: roots (-5 +- sqrt(17))/4 ~ -2.28, -0.22
    auto two = isolate_real_roots(poly({1, 5, 2}), domain);
    REQUIRE(two.size() == 2);
    RationalInterval left = refine_interval(poly({1, 5, 2}), two[0], make_rat(1, 1000));
    RationalInterval right = refine_interval(poly({1, 5, 2}), two[1], make_rat(1, 1000));
    CHECK(left.lo < make_rat(-228, 100));
    CHECK(left.hi > make_rat(-229, 100));
    CHECK(right.lo < make_rat(-219, 1000));
    CHECK(right.hi > make_rat(-220, 1000));

    // w-form of the Conway polynomial of K(1,0,0,0,0,0,0): sign changes at
    // -4, -3, -1, -1/4, 0 give exactly three isolating intervals.
    IntPolynomial cubic = poly({1, 9, 9, 2});
    CHECK(cubic.evaluate(Rat(-4)) < 0);
    CHECK(cubic.evaluate(Rat(-3)) > 0);
    CHECK(cubic.evaluate(Rat(-1)) < 0);
    CHECK(cubic.evaluate(make_rat(-1, 4)) < 0);
    CHECK(cubic.evaluate(Rat(0)) > 0);
    auto three = isolate_real_roots(cubic, domain);
    CHECK(three.size() == 3);

    CHECK_THROWS_AS(isolate_real_roots(poly({1, 2, 1}), RationalInterval{Rat(-4), Rat(4)}),
                    NonSquarefree);  // (w+1)^2

    CHECK(isolate_real_roots(poly({1, 0, 1}), domain).empty());  // w^2 + 1
}

TEST_CASE("refine_interval shrinks and preserves the root") {
    IntPolynomial p = poly({1, 1});
    RationalInterval iv = refine_interval(p, {Rat(-2), Rat(0)}, make_rat(1, 8));
    CHECK(iv.width() <= make_rat(1, 8));
    CHECK(iv.contains(Rat(-1)));

    // already satisfied: the result is a sub-interval
    RationalInterval again = refine_interval(p, iv, Rat(1));
    CHECK(again.lo >= iv.lo);
    CHECK(again.hi <= iv.hi);
    CHECK(again.contains(Rat(-1)));
}

TEST_CASE("isolation postconditions on random squarefree polynomials") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> coeff(-6, 6);
    RationalInterval domain{Rat(-10), Rat(10)};
    int isolated = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Int> c(5);
        for (auto& x : c) x = coeff(rng);
        IntPolynomial p{std::vector<Int>(c)};
        if (p.degree() < 1 || p.evaluate(Rat(-10)) == 0 || p.evaluate(Rat(10)) == 0) continue;
        std::vector<RationalInterval> ivs;
        try {
            ivs = isolate_real_roots(p, domain);
        } catch (const NonSquarefree&) {
            continue;
        }
        // each interval brackets a sign change and the count matches Sturm
        for (const auto& iv : ivs) {
            ++isolated;
            CHECK(sgn(p.evaluate(iv.lo)) * sgn(p.evaluate(iv.hi)) == -1);
        }
        CHECK(static_cast<int>(ivs.size()) == count_real_roots(p, domain.lo, domain.hi));
        for (std::size_t i = 1; i < ivs.size(); ++i) CHECK(ivs[i - 1].hi <= ivs[i].lo);
    }
    CHECK(isolated > 50);  // the sweep actually exercised the machinery
}

TEST_CASE("cyclotomic and cosine minimal polynomials") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));

    CHECK(cos_two_pi_minimal_poly(1) == poly({-2, 1}));      // y - 2
    CHECK(cos_two_pi_minimal_poly(2) == poly({2, 1}));       // y + 2
    CHECK(cos_two_pi_minimal_poly(5) == poly({-1, 1, 1}));   // y^2 + y - 1
    CHECK(cos_two_pi_minimal_poly(12) == poly({-3, 0, 1}));  // y^2 - 3
    CHECK(shifted_cos_minimal_poly(5) == poly({5, 5, 1}));   // (w+2)^2 + (w+2) - 1

    // roots of the shifted polynomial are 2cos(2*pi*a/n) - 2 in (-4, 0)
    for (unsigned n : {5u, 7u, 8u, 9u, 16u}) {
        auto roots = isolate_real_roots(shifted_cos_minimal_poly(n), {Rat(-4), Rat(0)});
        unsigned coprime = 0;
        for (unsigned a = 1; 2 * a < n; ++a)
            if (std::gcd(a, n) == 1) ++coprime;
        CHECK(roots.size() == coprime);
    }
}

TEST_CASE("certified cosine enclosures") {
    RationalInterval c0 = cos_enclosure(Rat(0), make_rat(1, 1000000));
    CHECK(c0.contains(Rat(1)));

    RationalInterval c1 = cos_enclosure(Rat(1), make_rat(1, 10000000));
    CHECK(c1.width() <= make_rat(1, 10000000));
    CHECK(c1.lo < make_rat(5403024, 10000000));
    CHECK(c1.hi > make_rat(5403023, 10000000));

    RationalInterval cpi = cos_enclosure(make_rat(22, 7), make_rat(1, 1000000));
    CHECK(cpi.lo > Rat(-1));
    CHECK(cpi.hi < make_rat(-999, 1000));
}
