#pragma once

#include <gmpxx.h>

#include <string>

#include "pretzelccs/errors.hpp"

namespace pretzel {

// Arbitrary-precision signed integer.
using Int = mpz_class;

// Arbitrary-precision rational, kept reduced with positive denominator
// (gmp canonicalizes on construction and after every operation).
using Rat = mpq_class;

// mpq_class(num, den) does not reduce; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

// Natural form: "3", "-5/9".
inline std::string to_string(const Rat& v) { return v.get_str(); }

// Always "num/den", e.g. "0/1", "4/1", "-5/9".
inline std::string to_fraction_string(const Rat& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

struct RationalInterval {
    Rat lo;
    Rat hi;

    RationalInterval() = default;
    RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw Error("RationalInterval: lo > hi");
    }

    Rat width() const { return hi - lo; }
    Rat midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool disjoint_from(const RationalInterval& o) const {
        return hi < o.lo || o.hi < lo;
    }
};

}  // namespace pretzel
