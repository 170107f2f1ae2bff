#include <doctest.h>

#include "pretzelccs/obstruction.hpp"

using namespace pretzel;

namespace {

bool has_reason(const Verdict& v, const std::string& criterion) {
    for (const Reason& r : v.reasons)
        if (r.criterion == criterion) return true;
    return false;
}

}  // namespace

TEST_CASE("strong ratio point values") {
    CHECK(strong_ratio(PretzelKnot({1, 0, 0, 0, 0})).value == make_rat(44, 15));
    CHECK(strong_ratio(PretzelKnot({2, 2, 0, 0, 0, 0, 0})).value == make_rat(400, 69));
    CHECK(strong_ratio(PretzelKnot({1, 0, 0, 0, 0, 0, 0})).value == Rat(4));
    CHECK(strong_ratio(PretzelKnot({1, 1, 0, 0, 0})).value == make_rat(88, 25));
    CHECK(strong_ratio(PretzelKnot({2, 0, 0, 0, 0})).value == make_rat(532, 153));
    CHECK(strong_ratio(PretzelKnot({1, 0, 0, 0, 0})).denominator_sign == 1);
}

TEST_CASE("ratio window") {
    RatioWindow w = ratio_window_check(PretzelKnot({2, 1, 0, 0, 0}));
    CHECK_FALSE(w.pass);
    CHECK(w.lhs == Rat(792));
    CHECK(w.rhs == Rat(776));

    CHECK_FALSE(ratio_window_check(PretzelKnot({3, 0, 0, 0, 0})).pass);
    CHECK(ratio_window_check(PretzelKnot({1, 0, 0, 0, 0})).pass);
    CHECK(ratio_window_check(PretzelKnot({2, 0, 0, 0, 0})).pass);

    RatioWindow w3 = ratio_window_check(PretzelKnot({1, 1, 1, 1, 0, 0, 0}));
    CHECK_FALSE(w3.pass);
    CHECK(w3.lhs == Rat(3584));
    CHECK(w3.rhs == Rat(3528));
}

TEST_CASE("weak checks") {
    auto fires = [](const std::vector<WeakCheck>& checks, const std::string& name) {
        for (const WeakCheck& w : checks)
            if (w.name == name) return w.fires;
        return false;
    };

    CHECK(fires(weak_checks(PretzelKnot({1, 1, 1, 0, 0})), "v3-bound-genus2"));
    CHECK_FALSE(fires(weak_checks(PretzelKnot({1, 0, 0, 0, 0})), "v3-bound-genus2"));
    CHECK(fires(weak_checks(PretzelKnot({5, 0, 0, 0, 0, 0, 0})), "v3-bound-genus3"));

    // 2|v3| = 22 < 31 = 7*a2 - 4 for K(1,0,0,0,0)
    for (const WeakCheck& w : weak_checks(PretzelKnot({1, 0, 0, 0, 0})))
        if (w.name == "v3-bound-genus2") {
            CHECK(w.lhs == 22);
            CHECK(w.rhs == 31);
        }
}

TEST_CASE("twist sum threshold") {
    CHECK(twist_sum_threshold(PretzelKnot({5, 0, 0, 0, 0})).pass);
    CHECK(twist_sum_threshold(PretzelKnot({3, 2, 0, 0, 0})).pass);
    CHECK_FALSE(twist_sum_threshold(PretzelKnot({2, 0, 0})).pass);
    CHECK(twist_sum_threshold(PretzelKnot({3, 0, 0})).pass);
    CHECK(twist_sum_threshold(PretzelKnot({7, 0, 0, 0, 0, 0, 0})).pass);
    CHECK_FALSE(twist_sum_threshold(PretzelKnot({6, 0, 0, 0, 0, 0, 0})).pass);

    TwistSumThreshold t = twist_sum_threshold(PretzelKnot({5, 0, 0, 0, 0}));
    CHECK(t.margin == 42);
    CHECK(t.margin_sq == 1764);
    CHECK(t.bound == 948);
}

TEST_CASE("slope sums") {
    CHECK(cass_slope_sum(PretzelKnot({1, 0, 0, 0, 0, 0, 0}), 5) == make_rat(-5, 9));
    CHECK(cass_slope_sum(PretzelKnot({2, 1, 0, 0, 0}), 1) == 0);
    CHECK(cass_slope_sum(PretzelKnot({1, 0, 0, 0, 0, 0, 0}), 2) == make_rat(-1, 6));
}

TEST_CASE("decide: the paper-scale endgames") {
    Verdict v1 = decide(PretzelKnot({1, 0, 0, 0, 0}));
    CHECK(v1.outcome == Outcome::NoCCS);
    CHECK(has_reason(v1, "signature-ratio-tail"));
    CHECK(v1.survivors.empty());

    Verdict v2 = decide(PretzelKnot({1, 0, 0, 0, 0, 0, 0}));
    CHECK(v2.outcome == Outcome::NoCCS);
    CHECK(has_reason(v2, "slope-sum-integrality"));

    Verdict v3 = decide(PretzelKnot({0, 0, 0, 0, 0}));
    CHECK(v3.outcome == Outcome::KnownChiral);

    Verdict v4 = decide(PretzelKnot({2, 1, 1, 0, 0, 0, 0}));
    CHECK(v4.outcome == Outcome::NoCCS);

    Verdict v5 = decide(PretzelKnot({2, 1, 0, 0, 0}));
    CHECK(v5.outcome == Outcome::NoCCS);
    REQUIRE_FALSE(v5.reasons.empty());
    CHECK(v5.reasons.front().criterion == "ratio-window");
    CHECK(v5.reasons.front().detail.find("792") != std::string::npos);
    CHECK(v5.reasons.front().detail.find("776") != std::string::npos);

    CHECK_THROWS_AS(decide(PretzelKnot({4})), WrongGenus);
}

TEST_CASE("decide is deterministic and permutation-stable") {
    Verdict a = decide(PretzelKnot({1, 0, 0, 0, 0, 0, 0}));
    Verdict b = decide(PretzelKnot({0, 0, 0, 1, 0, 0, 0}));
    REQUIRE(a.reasons.size() == b.reasons.size());
    for (std::size_t i = 0; i < a.reasons.size(); ++i) {
        CHECK(a.reasons[i].criterion == b.reasons[i].criterion);
        CHECK(a.reasons[i].detail == b.reasons[i].detail);
    }
    CHECK(a.outcome == b.outcome);
}

TEST_CASE("stage-3 eliminations re-checked by brute force") {
    // For p excluded by the tail bound, sigma(K,p)/p must indeed differ
    // from F: re-check the first ten admissible p directly.
    for (const std::vector<long>& t :
         {std::vector<long>{1, 0, 0, 0, 0}, {2, 0, 0, 0, 0}, {1, 1, 0, 0, 0}}) {
        PretzelKnot k(t);
        Rat f = strong_ratio(k).value;
        SignatureProfile profile = signature_profile(k);
        Int denom = f.get_den();
        for (Int p = denom; p <= 10 * denom; p += denom)
            CHECK(make_rat(p_signature(profile, p).value, p) != f);
    }
    // ...and for the one knot where a p does satisfy sigma/p = F, it is
    // exactly p = 5 among the first ten.
    PretzelKnot k({1, 0, 0, 0, 0, 0, 0});
    SignatureProfile profile = signature_profile(k);
    for (Int p = 1; p <= 10; p += 1) {
        bool equal = make_rat(p_signature(profile, p).value, p) == Rat(4);
        CHECK(equal == (p == 5));
    }
}

TEST_CASE("decide on the genus-1 family") {
    CHECK(decide(PretzelKnot({0, 0, 0})).outcome == Outcome::KnownChiral);
    Verdict v = decide(PretzelKnot({1, 0, 0}));
    CHECK(v.outcome == Outcome::NoCCS);  // F = 24/13, no multiple of 13 survives the tail
    CHECK(decide(PretzelKnot({2, 0, 0})).outcome == Outcome::NoCCS);
    CHECK(decide(PretzelKnot({1, 1, 1})).outcome == Outcome::NoCCS);
}

TEST_CASE("weak criteria are relaxations of the window") {
    for (unsigned g : {2u, 3u}) {
        for (const PretzelKnot& k : enumerate_canonical(g, 1, 5)) {
            bool any_weak = false;
            for (const WeakCheck& w : weak_checks(k)) any_weak |= w.fires;
            if (any_weak) CHECK_FALSE(ratio_window_check(k).pass);
        }
    }
}

TEST_CASE("enumeration of canonical knots") {
    CHECK(enumerate_canonical(2, 1, 4).size() == 11);
    CHECK(enumerate_canonical(2, 1, 6).size() == 28);
    CHECK(enumerate_canonical(3, 1, 5).size() == 18);
    CHECK(enumerate_canonical(2, 0, 4).size() == 12);  // with the all-zero knot
    auto bounded = enumerate_canonical(2, 1, 6, 1);
    for (const PretzelKnot& k : bounded)
        for (long t : k.twists()) CHECK(t <= 1);
}

TEST_CASE("verify_theorems at reduced scale") {
    VerifyConfig config;
    config.genus2_max_sum = 3;
    config.genus3_max_sum = 2;
    config.threshold_genus_max = 3;
    config.threshold_samples = 20;
    VerifyReport report = verify_theorems(config);
    CHECK(report.ok);
    CHECK(report.knots_checked == 6 + 1 + 3 + 1);
    CHECK(!report.lines.empty());
}
