#include "pretzelccs/invariants.hpp"

#include "pretzelccs/determinant.hpp"

namespace pretzel {

namespace {

Int div_exact(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw Error("inexact integer division: " + a.get_str() + " / " + b.get_str());
    return q;
}

Int a2_closed_vec(const std::vector<long>& ks) {
    const Int g(static_cast<long>((ks.size() - 1) / 2));
    if (g == 0) return 0;
    std::vector<Int> s = elementary_symmetric_all(ks);
    return div_exact(g * (g + 1), 2) + g * s[1] + (ks.size() >= 2 ? s[2] : Int(0));
}

Int v3_closed_vec(const std::vector<long>& ks) {
    const Int g(static_cast<long>((ks.size() - 1) / 2));
    if (g == 0) return 0;
    std::vector<Int> s = elementary_symmetric_all(ks);
    const Int s1 = s[1], s2 = s.size() > 2 ? s[2] : Int(0), s3 = s.size() > 3 ? s[3] : Int(0);
    Int inner = div_exact(g * (g + 1) * (2 * g + 1), 3) + g * (2 * g + 1) * s1 + g * s1 * s1 +
                2 * g * s2 + s1 * s2 + s3;
    return -div_exact(inner, 2);
}

}  // namespace

ConwayPolynomial::ConwayPolynomial(IntPolynomial z_poly) : poly_(std::move(z_poly)) {
    if (poly_.coeff(0) != 1)
        throw Error("Conway polynomial must have constant term 1, got " + poly_.to_string("z"));
    for (int i = 1; i <= poly_.degree(); i += 2)
        if (poly_.coeff(static_cast<std::size_t>(i)) != 0)
            throw Error("Conway polynomial of a knot must be even: " + poly_.to_string("z"));
}

ConwayPolynomial conway_polynomial(const PretzelKnot& k) {
    if (k.is_unknot()) return ConwayPolynomial(IntPolynomial::constant(1));
    SeifertMatrix a = seifert_matrix(k);
    LaurentMatrix m(a.dim, std::vector<LaurentPolynomial>(a.dim));
    for (std::size_t i = 0; i < a.dim; ++i)
        for (std::size_t j = 0; j < a.dim; ++j)
            m[i][j] = LaurentPolynomial::monomial(1, a.at(i, j)) -
                      LaurentPolynomial::monomial(-1, a.at(j, i));
    IntPolynomial nabla = bareiss_det(std::move(m)).to_polynomial_in(-1);
    if (nabla.degree() != static_cast<int>(2 * k.genus()))
        throw Error("Conway polynomial has degree " + std::to_string(nabla.degree()) +
                    ", expected " + std::to_string(2 * k.genus()) + " for " + k.to_string());
    return ConwayPolynomial(std::move(nabla));
}

Int a2j_from_conway(const ConwayPolynomial& c, unsigned j) {
    if (j < 1) throw Error("a2j_from_conway: j must be >= 1");
    return c.a2j(j);
}

Int a2_closed(const PretzelKnot& k) { return a2_closed_vec(k.twists()); }

Int v3_closed(const PretzelKnot& k) { return v3_closed_vec(k.twists()); }

Int a4_closed_genus2(const PretzelKnot& k) {
    if (k.genus() != 2)
        throw WrongGenus("a4_closed_genus2 needs genus 2, got " + std::to_string(k.genus()));
    std::vector<Int> s = elementary_symmetric_all(k.twists());
    return 1 + s[1] + s[2] + s[3] + s[4];
}

Genus3Coefficients a2_a4_a6_closed_genus3(const PretzelKnot& k) {
    if (k.genus() != 3)
        throw WrongGenus("a2_a4_a6_closed_genus3 needs genus 3, got " + std::to_string(k.genus()));
    std::vector<Int> s = elementary_symmetric_all(k.twists());
    Genus3Coefficients c;
    c.a2 = 6 + 3 * s[1] + s[2];
    c.a4 = 5 + 4 * s[1] + 3 * s[2] + 2 * s[3] + s[4];
    c.a6 = 1 + s[1] + s[2] + s[3] + s[4] + s[5] + s[6];
    return c;
}

Int v3_skein(const PretzelKnot& k) {
    std::vector<long> ks = k.twists();
    Int v3 = 0;
    // Each iteration empties the last two strands of the current pretzel
    // and then removes them, dropping the genus by one.
    while (ks.size() > 1) {
        const Int g(static_cast<long>((ks.size() - 1) / 2));
        for (std::size_t strand : {ks.size() - 1, ks.size() - 2}) {
            std::vector<long> prefix(ks.begin(), ks.begin() + static_cast<long>(strand));
            const Int lk = elementary_symmetric(1, prefix) + g;
            while (ks[strand] > 0) {
                Int a2_hi = a2_closed_vec(ks);
                ks[strand] -= 1;
                Int a2_lo = a2_closed_vec(ks);
                v3 -= div_exact(a2_hi + a2_lo + lk * lk, 2);
            }
        }
        // Two-crossing reduction K(k1,...,k_{2g-1},0,0) -> K(k1,...,k_{2g-1}).
        std::vector<long> smaller(ks.begin(), ks.end() - 2);
        const Int lk = elementary_symmetric(1, smaller) + g;
        v3 -= div_exact(a2_closed_vec(ks) + a2_closed_vec(smaller) + lk * lk, 2);
        ks = std::move(smaller);
    }
    return v3;
}

Rat v3_from_jones(const PretzelKnot& k) {
    LaurentPolynomial v = jones_polynomial(k).in_t;
    LaurentPolynomial d2 = v.derivative().derivative();
    Int v2_at_1 = d2.evaluate_at_one();
    Int v3_at_1 = d2.derivative().evaluate_at_one();
    Rat result = -Rat(v3_at_1) / 36 - Rat(v2_at_1) / 12;
    if (!is_integer(result))
        throw NonIntegerV3("v3 from Jones derivatives is not an integer for " + k.to_string() +
                           ": " + to_string(result));
    return result;
}

namespace {

void check_route(const std::string& value, const std::string& route_a, const Int& a,
                 const std::string& route_b, const Int& b) {
    if (a != b)
        throw RouteMismatch(value + ": " + route_a + " gives " + a.get_str() + " but " + route_b +
                            " gives " + b.get_str());
}

}  // namespace

InvariantSet full_invariants(const PretzelKnot& k) {
    ConwayPolynomial conway = conway_polynomial(k);
    const unsigned g = k.genus();

    Int a2 = conway.a2j(1);
    check_route("a2", "determinant", a2, "closed-form", a2_closed(k));

    std::optional<Int> a4, a6;
    std::map<std::string, std::vector<std::string>> routes;
    routes["conway"] = {"determinant"};
    routes["a2"] = {"determinant", "closed-form"};
    if (g >= 2) {
        a4 = conway.a2j(2);
        routes["a4"] = {"determinant"};
    }
    if (g >= 3) {
        a6 = conway.a2j(3);
        routes["a6"] = {"determinant"};
    }
    if (g == 2) {
        check_route("a4", "determinant", *a4, "closed-form", a4_closed_genus2(k));
        routes["a4"].push_back("closed-form");
    }
    if (g == 3) {
        Genus3Coefficients c = a2_a4_a6_closed_genus3(k);
        check_route("a2", "determinant", a2, "closed-form(genus3)", c.a2);
        check_route("a4", "determinant", *a4, "closed-form", c.a4);
        check_route("a6", "determinant", *a6, "closed-form", c.a6);
        routes["a4"].push_back("closed-form");
        routes["a6"].push_back("closed-form");
    }

    Int v3 = v3_closed(k);
    check_route("v3", "closed-form", v3, "skein", v3_skein(k));
    Rat v3j = v3_from_jones(k);
    check_route("v3", "closed-form", v3, "jones", v3j.get_num());
    routes["v3"] = {"closed-form", "skein", "jones"};

    return InvariantSet{k, std::move(conway), std::move(a2), std::move(a4), std::move(a6),
                        std::move(v3), std::move(routes)};
}

}  // namespace pretzel
