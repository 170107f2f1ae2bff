#include <doctest.h>

#include <algorithm>
#include <random>

#include "pretzelccs/determinant.hpp"
#include "pretzelccs/invariants.hpp"

using namespace pretzel;

namespace {

IntPolynomial zpoly(std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return IntPolynomial(std::move(c));
}

std::vector<std::vector<long>> canonical_twists(unsigned genus, long max_twist) {
    std::vector<std::vector<long>> out;
    std::vector<long> current(2 * genus + 1, 0);
    auto rec = [&](auto&& self, std::size_t pos, long prev) -> void {
        if (pos == current.size()) {
            out.push_back(current);
            return;
        }
        for (long v = std::min(prev, max_twist); v >= 0; --v) {
            current[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, max_twist);
    return out;
}

}  // namespace

TEST_CASE("Conway polynomial point values") {
    CHECK(conway_polynomial(PretzelKnot({1, 0, 0, 0, 0})).poly() == zpoly({1, 0, 5, 0, 2}));
    CHECK(conway_polynomial(PretzelKnot({1, 1, 0, 0, 0})).poly() == zpoly({1, 0, 8, 0, 4}));
    CHECK(conway_polynomial(PretzelKnot({2, 0, 0, 0, 0})).poly() == zpoly({1, 0, 7, 0, 3}));
    CHECK(conway_polynomial(PretzelKnot({7})).poly() == zpoly({1}));
    CHECK(conway_polynomial(PretzelKnot({0, 0, 0})).poly() == zpoly({1, 0, 1}));
}

TEST_CASE("coefficient extraction") {
    ConwayPolynomial c(zpoly({1, 0, 5, 0, 2}));
    CHECK(a2j_from_conway(c, 1) == 5);
    CHECK(a2j_from_conway(c, 2) == 2);
    CHECK(a2j_from_conway(c, 3) == 0);
    CHECK(a2j_from_conway(ConwayPolynomial(zpoly({1, 0, 7, 0, 3})), 2) == 3);
    CHECK_THROWS_AS(ConwayPolynomial(zpoly({2, 0, 1})), Error);   // constant term
    CHECK_THROWS_AS(ConwayPolynomial(zpoly({1, 1, 1})), Error);   // odd power
}

TEST_CASE("closed forms for a2 and v3") {
    CHECK(a2_closed(PretzelKnot({0, 0, 0})) == 1);
    CHECK(v3_closed(PretzelKnot({0, 0, 0})) == -1);
    CHECK(a2_closed(PretzelKnot({1, 1, 1, 1, 0, 0, 0})) == 24);
    CHECK(v3_closed(PretzelKnot({1, 1, 1, 1, 0, 0, 0})) == -112);
    CHECK(a2_closed(PretzelKnot({1, 0, 0, 0, 0})) == 5);
    CHECK(v3_closed(PretzelKnot({1, 0, 0, 0, 0})) == -11);
    CHECK(a2_closed(PretzelKnot({9})) == 0);
    CHECK(v3_closed(PretzelKnot({9})) == 0);
}

TEST_CASE("genus-specific closed forms") {
    CHECK(a4_closed_genus2(PretzelKnot({1, 1, 0, 0, 0})) == 4);
    CHECK_THROWS_AS(a4_closed_genus2(PretzelKnot({1, 0, 0})), WrongGenus);
    CHECK_THROWS_AS(a4_closed_genus2(PretzelKnot({1, 0, 0, 0, 0, 0, 0})), WrongGenus);

    Genus3Coefficients c = a2_a4_a6_closed_genus3(PretzelKnot({1, 1, 1, 1, 0, 0, 0}));
    CHECK(c.a2 == 24);
    CHECK(c.a4 == 48);
    CHECK(c.a6 == 16);
    CHECK(a2_a4_a6_closed_genus3(PretzelKnot({0, 0, 0, 0, 0, 0, 0})).a6 == 1);
    CHECK_THROWS_AS(a2_a4_a6_closed_genus3(PretzelKnot({1, 0, 0, 0, 0})), WrongGenus);
}

TEST_CASE("v3 by the skein recursion") {
    CHECK(v3_skein(PretzelKnot({0, 0, 0})) == -1);
    CHECK(v3_skein(PretzelKnot({1, 0, 0, 0, 0})) == -11);
    CHECK(v3_skein(PretzelKnot({2, 1, 0, 0, 0})) == -36);
    CHECK(v3_skein(PretzelKnot({4})) == 0);
}

TEST_CASE("Jones polynomial via the bracket") {
    LaurentPolynomial left_trefoil = jones_polynomial(PretzelKnot({0, 0, 0})).in_t;
    LaurentPolynomial expected = LaurentPolynomial::monomial(-4, -1) +
                                 LaurentPolynomial::monomial(-3, 1) +
                                 LaurentPolynomial::monomial(-1, 1);
    CHECK(left_trefoil == expected);

    CHECK(jones_polynomial(PretzelKnot({2})).in_t == LaurentPolynomial::monomial(0, 1));

    // V(1) = 1 is checked inside jones_polynomial; sweep a range
    for (const auto& t : canonical_twists(2, 2)) jones_polynomial(PretzelKnot(t));
    for (const auto& t : canonical_twists(3, 1)) jones_polynomial(PretzelKnot(t));
}

TEST_CASE("v3 from Jones derivatives") {
    CHECK(v3_from_jones(PretzelKnot({0, 0, 0})) == -1);
    CHECK(v3_from_jones(PretzelKnot({1})) == 0);
    CHECK(v3_from_jones(PretzelKnot({1, 0, 0, 0, 0})) == -11);
}

TEST_CASE("full invariants aggregate and cross-check") {
    InvariantSet inv = full_invariants(PretzelKnot({2, 1, 0, 0, 0}));
    CHECK(inv.a2 == 11);
    CHECK(*inv.a4 == 6);
    CHECK(inv.v3 == -36);
    CHECK(inv.mirror_v3() == 36);
    CHECK(inv.routes.at("v3") == std::vector<std::string>{"closed-form", "skein", "jones"});

    CHECK(full_invariants(PretzelKnot({2, 0, 0, 0, 0, 0, 0})).a2 == 12);

    InvariantSet unknot = full_invariants(PretzelKnot({3}));
    CHECK(unknot.conway.poly() == zpoly({1}));
    CHECK(unknot.v3 == 0);
    CHECK_FALSE(unknot.a4.has_value());
}

TEST_CASE("route agreement across the sweep") {
    // determinant vs closed forms vs skein vs Jones, exact equality
    for (unsigned g = 1; g <= 3; ++g) {
        for (const auto& t : canonical_twists(g, 2)) {
            PretzelKnot k(t);
            InvariantSet inv = full_invariants(k);  // throws RouteMismatch on any disagreement
            CHECK(inv.a2 == a2_closed(k));
        }
    }
}

TEST_CASE("permutation invariance of the invariants") {
    for (unsigned g = 1; g <= 2; ++g) {
        for (const auto& t : canonical_twists(g, 2)) {
            PretzelKnot canonical(t);
            ConwayPolynomial reference = conway_polynomial(canonical);
            Int v3_ref = v3_closed(canonical);
            std::vector<long> perm = t;
            std::sort(perm.begin(), perm.end());
            do {
                PretzelKnot k(perm);
                CHECK(conway_polynomial(k) == reference);
                CHECK(v3_closed(k) == v3_ref);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
    // genus 3: closed forms over all distinct permutations, determinant sampled
    std::mt19937_64 rng(31);
    for (const auto& t : canonical_twists(3, 2)) {
        PretzelKnot canonical(t);
        Int a2_ref = a2_closed(canonical), v3_ref = v3_closed(canonical);
        ConwayPolynomial conway_ref = conway_polynomial(canonical);
        std::vector<long> perm = t;
        std::sort(perm.begin(), perm.end());
        int index = 0;
        do {
            PretzelKnot k(perm);
            CHECK(a2_closed(k) == a2_ref);
            CHECK(v3_closed(k) == v3_ref);
            if (index++ % 7 == 0) CHECK(conway_polynomial(k) == conway_ref);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("sign pattern of the family") {
    for (unsigned g = 1; g <= 3; ++g) {
        for (const auto& t : canonical_twists(g, 2)) {
            PretzelKnot k(t);
            ConwayPolynomial c = conway_polynomial(k);
            for (unsigned j = 1; j <= g; ++j) CHECK(c.a2j(j) > 0);
            CHECK(v3_closed(k) < 0);
        }
    }
}

TEST_CASE("a2 increment when adding a twist equals the linking number") {
    std::mt19937_64 rng(37);
    std::uniform_int_distribution<long> twist(0, 3);
    std::uniform_int_distribution<unsigned> genus(1, 4);
    for (int trial = 0; trial < 80; ++trial) {
        unsigned g = genus(rng);
        std::vector<long> t(2 * g + 1);
        for (auto& x : t) x = twist(rng);
        std::vector<long> t_plus = t;
        t_plus.back() += 1;
        std::vector<long> head(t.begin(), t.end() - 1);
        Int lk = elementary_symmetric(1, head) + g;
        CHECK(a2_closed(PretzelKnot(t_plus)) - a2_closed(PretzelKnot(t)) == lk);
    }
}

TEST_CASE("x-form determinant is symmetric under x -> -1/x") {
    for (const std::vector<long>& t :
         {std::vector<long>{1, 0, 0, 0, 0}, {2, 1, 0}, {1, 1, 1, 1, 0, 0, 0}}) {
        SeifertMatrix a = seifert_matrix(PretzelKnot(t));
        LaurentMatrix m(a.dim, std::vector<LaurentPolynomial>(a.dim));
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j)
                m[i][j] = LaurentPolynomial::monomial(1, a.at(i, j)) -
                          LaurentPolynomial::monomial(-1, a.at(j, i));
        LaurentPolynomial det = bareiss_det(m);
        LaurentPolynomial mirrored;
        for (const auto& [e, c] : det.terms())
            mirrored = mirrored +
                       LaurentPolynomial::monomial(-e, (e % 2 == 0) ? c : -c);
        CHECK(det == mirrored);
        CHECK(det.to_polynomial_in(-1).coeff(0) == 1);  // nabla(0) = 1
    }
}
