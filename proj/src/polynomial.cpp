#include "pretzelccs/polynomial.hpp"

#include <sstream>

namespace pretzel {

namespace {
const Int kZero = 0;
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(Int c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, Int c) {
    IntPolynomial p;
    if (c != 0) {
        p.coeffs_.assign(degree + 1, Int(0));
        p.coeffs_[degree] = std::move(c);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw Error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> r(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> r(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> r = coeffs_;
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Int> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(r));
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPolynomial::evaluate(const Rat& x) const {
    Rat acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPolynomial IntPolynomial::compose_linear(const Int& a, const Int& b) const {
    IntPolynomial acc;
    IntPolynomial arg({b, a});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + IntPolynomial::constant(*it);
    return acc;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero polynomial");
    if (is_zero()) return {};
    if (degree() < divisor.degree()) throw Error("inexact polynomial division");
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    const Int& lead = divisor.leading();
    for (std::size_t i = quot.size(); i-- > 0;) {
        Int& top = rem[i + divisor.coeffs_.size() - 1];
        if (top == 0) continue;
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        if (r != 0) throw Error("inexact polynomial division");
        quot[i] = q;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
            rem[i + j] -= q * divisor.coeffs_[j];
    }
    for (const Int& c : rem)
        if (c != 0) throw Error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        Int c = coeffs_[i];
        if (first) {
            if (c < 0) os << "-", c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------

LaurentPolynomial LaurentPolynomial::monomial(long exp, Int c) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[exp] = std::move(c);
    return p;
}

LaurentPolynomial LaurentPolynomial::from_polynomial(const IntPolynomial& p, long shift) {
    LaurentPolynomial r;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        if (p.coeffs()[i] != 0) r.terms_[static_cast<long>(i) + shift] = p.coeffs()[i];
    return r;
}

long LaurentPolynomial::min_exp() const {
    if (is_zero()) throw Error("min_exp of the zero Laurent polynomial");
    return terms_.begin()->first;
}

long LaurentPolynomial::max_exp() const {
    if (is_zero()) throw Error("max_exp of the zero Laurent polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPolynomial::coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPolynomial::set(long e, Int c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) + c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
    LaurentPolynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.set(e, r.coeff(e) - c);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.set(e1 + e2, r.coeff(e1 + e2) + c1 * c2);
    return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_)
        if (e != 0) r.set(e - 1, c * Int(e));
    return r;
}

Int LaurentPolynomial::evaluate_at_one() const {
    Int acc = 0;
    for (const auto& [e, c] : terms_) acc += c;
    return acc;
}

LaurentPolynomial LaurentPolynomial::scale_exponents(long k) const {
    if (k == 0) throw Error("scale_exponents by zero");
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_[e * k] = c;
    return r;
}

LaurentPolynomial LaurentPolynomial::collapse_exponents(long d) const {
    if (d == 0) throw Error("collapse_exponents by zero");
    LaurentPolynomial r;
    for (const auto& [e, c] : terms_) {
        if (e % d != 0) throw Error("collapse_exponents: exponent " + std::to_string(e) +
                                    " not divisible by " + std::to_string(d));
        r.terms_[e / d] = c;
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
    if (divisor.is_zero()) throw Error("division by the zero Laurent polynomial");
    if (is_zero()) return {};
    // Shift both to ordinary polynomials and divide there; the exponent
    // offset of the quotient is the difference of the minimal exponents.
    std::vector<Int> num(static_cast<std::size_t>(max_exp() - min_exp()) + 1, Int(0));
    for (const auto& [e, c] : terms_) num[static_cast<std::size_t>(e - min_exp())] = c;
    std::vector<Int> den(static_cast<std::size_t>(divisor.max_exp() - divisor.min_exp()) + 1, Int(0));
    for (const auto& [e, c] : divisor.terms_) den[static_cast<std::size_t>(e - divisor.min_exp())] = c;
    IntPolynomial q = IntPolynomial(std::move(num)).divide_exact(IntPolynomial(std::move(den)));
    return from_polynomial(q, min_exp() - divisor.min_exp());
}

IntPolynomial LaurentPolynomial::to_polynomial_in(int sign) const {
    if (sign != 1 && sign != -1) throw Error("to_polynomial_in: sign must be +1 or -1");
    LaurentPolynomial rem = *this;
    std::vector<Int> out;
    while (!rem.is_zero() && rem.max_exp() > 0) {
        long d = rem.max_exp();
        Int c = rem.coeff(d);
        if (static_cast<std::size_t>(d) >= out.size()) out.resize(static_cast<std::size_t>(d) + 1, Int(0));
        out[static_cast<std::size_t>(d)] += c;
        // subtract c * (x + sign*x^{-1})^d = c * sum_k C(d,k) sign^k x^{d-2k}
        LaurentPolynomial basis;
        for (long k = 0; k <= d; ++k) {
            Int b = binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k));
            if (sign == -1 && (k % 2 == 1)) b = -b;
            basis.set(d - 2 * k, basis.coeff(d - 2 * k) + b);
        }
        rem = rem - LaurentPolynomial::monomial(0, c) * basis;
    }
    if (!rem.is_zero()) {
        if (rem.max_exp() < 0 || rem.min_exp() < 0)
            throw RewriteFailure("Laurent polynomial is not symmetric in the requested basis: residue " +
                                 rem.to_string());
        if (out.empty()) out.resize(1, Int(0));
        out[0] += rem.coeff(0);
    }
    return IntPolynomial(std::move(out));
}

std::string LaurentPolynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Int c = it->second;
        long e = it->first;
        if (first) {
            if (c < 0) os << "-", c = -c;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0 || c != 1) os << c.get_str();
        if (e != 0) {
            if (c != 1) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace pretzel
