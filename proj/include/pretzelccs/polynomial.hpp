#pragma once

#include <map>
#include <string>
#include <vector>

#include "pretzelccs/numbers.hpp"

namespace pretzel {

/**
 * Dense univariate polynomial with integer coefficients.
 *
 * coeffs()[i] is the coefficient of x^i.  The representation is trimmed:
 * the leading coefficient is nonzero unless the polynomial is zero, in
 * which case the coefficient vector is empty and degree() returns -1.
 */
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial constant(Int c);
    static IntPolynomial monomial(std::size_t degree, Int c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(std::size_t i) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    IntPolynomial derivative() const;
    Int evaluate(const Int& x) const;
    Rat evaluate(const Rat& x) const;

    // p(a*x + b)
    IntPolynomial compose_linear(const Int& a, const Int& b) const;

    // Quotient of an exact division; throws Error if the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    std::vector<Int> coeffs_;
};

/**
 * Sparse Laurent polynomial: integer coefficients, integer (possibly
 * negative) exponents.  No zero coefficients are stored.
 */
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    static LaurentPolynomial monomial(long exp, Int c);
    static LaurentPolynomial from_polynomial(const IntPolynomial& p, long shift = 0);

    bool is_zero() const { return terms_.empty(); }
    long min_exp() const;
    long max_exp() const;
    Int coeff(long e) const;
    const std::map<long, Int>& terms() const { return terms_; }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-(const LaurentPolynomial& o) const;
    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    bool operator==(const LaurentPolynomial& o) const { return terms_ == o.terms_; }

    // d/dx; exponents may be negative.
    LaurentPolynomial derivative() const;
    Int evaluate_at_one() const;

    // x -> x^k (k nonzero; negative k mirrors the exponents).
    LaurentPolynomial scale_exponents(long k) const;

    // Requires every exponent divisible by d; replaces e by e/d (d nonzero,
    // may be negative).  Throws Error otherwise.
    LaurentPolynomial collapse_exponents(long d) const;

    // Quotient of an exact division; throws Error if not exact.
    LaurentPolynomial divide_exact(const LaurentPolynomial& divisor) const;

    /**
     * Rewrite as a polynomial in u = x + sign*x^{-1} (sign is +1 or -1).
     * Only defined for Laurent polynomials invariant under the matching
     * substitution (x -> x^{-1} for +1, x -> -x^{-1} for -1); throws
     * RewriteFailure when a nonconstant residue remains.
     */
    IntPolynomial to_polynomial_in(int sign) const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void set(long e, Int c);
    std::map<long, Int> terms_;
};

}  // namespace pretzel
