#include "pretzelccs/roots.hpp"

#include <utility>

namespace pretzel {

namespace {

// Dense polynomial over Q, local to the Sturm machinery.
using RatPoly = std::vector<Rat>;

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p) {
    RatPoly r;
    r.reserve(p.coeffs().size());
    for (const Int& c : p.coeffs()) r.emplace_back(c);
    return r;
}

Rat eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    RatPoly r;
    for (std::size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * Rat(static_cast<long>(i)));
    return r;
}

// Scale by a positive rational so the coefficients become coprime
// integers; positive scaling preserves all Sturm sign data.
void normalize(RatPoly& p) {
    trim(p);
    if (p.empty()) return;
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat& c : p) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    }
    Rat scale(den_lcm, num_gcd);
    for (Rat& c : p) c *= scale;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rat q = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= q * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

struct SturmChain {
    std::vector<RatPoly> seq;

    explicit SturmChain(const IntPolynomial& p) {
        RatPoly cur = to_rat(p);
        trim(cur);
        if (cur.empty()) throw Error("Sturm chain of the zero polynomial");
        normalize(cur);
        RatPoly nxt = derivative(cur);
        normalize(nxt);
        seq.push_back(cur);
        while (!nxt.empty()) {
            seq.push_back(nxt);
            RatPoly r = remainder(std::move(cur), nxt);
            for (Rat& c : r) c = -c;
            normalize(r);
            cur = std::move(nxt);
            nxt = std::move(r);
        }
    }

    int sign_variations(const Rat& x) const {
        int variations = 0, last = 0;
        for (const RatPoly& p : seq) {
            int s = sgn(eval(p, x));
            if (s == 0) continue;
            if (last != 0 && s != last) ++variations;
            last = s;
        }
        return variations;
    }
};

IntPolynomial clear_denominators(const RatPoly& p) {
    RatPoly q = p;
    normalize(q);
    std::vector<Int> c;
    c.reserve(q.size());
    for (const Rat& x : q) c.push_back(x.get_num());
    return IntPolynomial(std::move(c));
}

// gcd(p, p') over Q, returned with integer coprime coefficients.
IntPolynomial gcd_with_derivative(const IntPolynomial& p) {
    RatPoly a = to_rat(p), b = derivative(a);
    normalize(a);
    normalize(b);
    while (!b.empty()) {
        RatPoly r = remainder(std::move(a), b);
        normalize(r);
        a = std::move(b);
        b = std::move(r);
    }
    return clear_denominators(a);
}

}  // namespace

int count_real_roots(const IntPolynomial& p, const Rat& a, const Rat& b) {
    if (a >= b) return 0;
    if (p.is_zero()) throw Error("count_real_roots of the zero polynomial");
    if (p.degree() == 0) return 0;
    if (p.evaluate(a) == 0 || p.evaluate(b) == 0)
        throw Error("count_real_roots: domain endpoint is a root");
    SturmChain chain(p);
    return chain.sign_variations(a) - chain.sign_variations(b);
}

std::vector<RationalInterval> isolate_real_roots(const IntPolynomial& p,
                                                 const RationalInterval& domain) {
    const Rat &lo = domain.lo, &hi = domain.hi;
    if (p.is_zero()) throw Error("isolate_real_roots of the zero polynomial");
    if (p.evaluate(lo) == 0 || p.evaluate(hi) == 0)
        throw Error("isolate_real_roots: domain endpoint is a root");
    if (p.degree() == 0 || lo >= hi) return {};

    IntPolynomial g = gcd_with_derivative(p);
    if (g.degree() >= 1 && count_real_roots(g, lo, hi) > 0)
        throw NonSquarefree("gcd(p, p') vanishes on the domain: " + g.to_string());

    SturmChain chain(p);
    std::vector<RationalInterval> out;
    // Depth-first from the left so results come out sorted.
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> stack;
    stack.push_back({lo, hi, chain.sign_variations(lo) - chain.sign_variations(hi)});
    while (!stack.empty()) {
        Seg s = std::move(stack.back());
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat mid = (s.a + s.b) / 2;
        while (p.evaluate(mid) == 0) mid = (s.a + mid) / 2;
        int left = chain.sign_variations(s.a) - chain.sign_variations(mid);
        // Right half pushed first: the left half is processed first.
        stack.push_back({mid, s.b, s.count - left});
        stack.push_back({s.a, mid, left});
    }
    // Neighbors may share a (non-root) endpoint; shrink until disjoint.
    for (std::size_t i = 1; i < out.size(); ++i)
        while (!(out[i - 1].hi < out[i].lo)) {
            out[i - 1] = refine_interval(p, out[i - 1], out[i - 1].width() * Rat(2, 3));
            out[i] = refine_interval(p, out[i], out[i].width() * Rat(2, 3));
        }
    return out;
}

RationalInterval refine_interval(const IntPolynomial& p, const RationalInterval& iv,
                                 const Rat& width) {
    if (width <= 0) throw Error("refine_interval: width must be positive");
    Rat lo = iv.lo, hi = iv.hi;
    int slo = sgn(p.evaluate(lo)), shi = sgn(p.evaluate(hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw Error("refine_interval: interval does not bracket a sign change");
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(p.evaluate(mid));
        if (sm == 0) {
            // The root is exactly mid; clamp a small bracket around it.
            Rat d = width / 3;
            Rat a = mid - d < lo ? lo : mid - d;
            Rat b = mid + d > hi ? hi : mid + d;
            return {a, b};
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

}  // namespace pretzel
