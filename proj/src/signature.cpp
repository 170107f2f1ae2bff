#include "pretzelccs/signature.hpp"

#include <eigen3/Eigen/Dense>

#include <complex>
#include <exception>
#include <mutex>
#include <thread>

#include "pretzelccs/cyclotomic.hpp"
#include "pretzelccs/roots.hpp"
#include "pretzelccs/trig.hpp"

namespace pretzel {

namespace {

// pi to 39 digits; used only for radian-valued enclosures.
const Rat kPiLo = make_rat(Int("3141592653589793238462643383279502884197"),
                           int_pow(Int(10), 39));
const Rat kPiHi = make_rat(Int("3141592653589793238462643383279502884198"),
                           int_pow(Int(10), 39));

// One bisection step; p must change sign over iv.
void refine_step(const IntPolynomial& p, RationalInterval& iv) {
    RationalInterval next = refine_interval(p, iv, iv.width() * Rat(2, 3));
    iv = next;
}

// Remainder test against a monic divisor, exact over the integers.
bool monic_divides(const IntPolynomial& divisor, const IntPolynomial& p) {
    if (divisor.degree() < 1 || divisor.leading() != 1)
        throw Error("monic_divides: divisor must be monic of positive degree");
    if (p.is_zero()) return true;
    std::vector<Int> rem = p.coeffs();
    const auto& d = divisor.coeffs();
    while (rem.size() >= d.size()) {
        Int c = rem.back();
        std::size_t off = rem.size() - d.size();
        for (std::size_t j = 0; j < d.size(); ++j) rem[off + j] -= c * d[j];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return rem.empty();
}

// Certified enclosure of w = 2*cos(2*pi*frac) - 2 for a rational turn
// fraction, of width about tol.  The pi enclosure contributes ~1e-39.
RationalInterval shifted_cos_bounds(const Rat& frac, const Rat& tol) {
    Rat angle_lo = 2 * frac * kPiLo, angle_hi = 2 * frac * kPiHi;
    Rat pad = (angle_hi - angle_lo) / 2;
    RationalInterval c = cos_enclosure((angle_lo + angle_hi) / 2, tol / 4);
    return {2 * (c.lo - pad) - 2, 2 * (c.hi + pad) - 2};
}

// Euler phi by trial division; only called for small n.
unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

/**
 * Whether 2*cos(2*pi/n) - 2 is a root of q, decided exactly through the
 * minimal polynomial.  Degree phi(n)/2 > deg(q) rules divisibility out
 * immediately, and phi(n) >= sqrt(n/2) bounds the n worth testing, so
 * the cyclotomic work stays tiny.
 */
bool angle_hits_alexander_root(const Int& n, const IntPolynomial& q) {
    const long d = q.degree();
    if (!n.fits_ulong_p()) return false;
    unsigned long nn = n.get_ui();
    if (Int(8) * d * d < nn) return false;
    if (euler_phi(nn) > 2 * static_cast<unsigned long>(d)) return false;
    return monic_divides(shifted_cos_minimal_poly(static_cast<unsigned>(nn)), q);
}

// theta_m versus an exactly rational w-value c (never an interval
// endpoint when c is a root of q, by the isolation postcondition).
int compare_root_to_rational_w(SignatureProfile& profile, unsigned m, const Rat& c) {
    RationalInterval& iv = profile.roots_w[m];
    if (profile.wpoly.evaluate(c) == 0) {
        if (c <= iv.lo) return -1;  // w_m > c  =>  theta_m < angle(c)
        if (c >= iv.hi) return +1;
        return 0;  // c is a root inside the isolating interval: c == w_m
    }
    while (true) {
        if (c <= iv.lo) return -1;
        if (c >= iv.hi) return +1;
        refine_step(profile.wpoly, iv);
    }
}

}  // namespace

SignatureProfile signature_profile(const PretzelKnot& k) {
    const unsigned g = k.genus();
    if (g == 0) throw WrongGenus("signature_profile requires genus >= 1");
    ConwayPolynomial conway = conway_polynomial(k);
    std::vector<Int> q(g + 1);
    for (unsigned j = 0; j <= g; ++j) q[j] = conway.a2j(j);
    SignatureProfile profile;
    profile.genus = g;
    profile.wpoly = IntPolynomial(std::move(q));
    auto up = isolate_real_roots(profile.wpoly, {Rat(-4), Rat(0)});
    if (up.size() != g)
        throw WrongRootCount(k.to_string() + ": found " + std::to_string(up.size()) +
                             " Alexander root angles in (0, pi), expected " + std::to_string(g));
    profile.roots_w.assign(up.rbegin(), up.rend());
    return profile;
}

int compare_root_to_turn_fraction(SignatureProfile& profile, unsigned m, const Rat& frac) {
    if (m >= profile.roots_w.size()) throw Error("compare_root_to_turn_fraction: bad root index");
    if (frac < 0 || frac > Rat(1, 2)) throw Error("turn fraction must lie in [0, 1/2]");
    if (frac == 0) return +1;          // theta_m > 0
    if (frac == Rat(1, 2)) return -1;  // theta_m < pi
    const Int n = frac.get_den();

    // Angles with rational cosine are compared exactly.
    if (n == 3) return compare_root_to_rational_w(profile, m, Rat(-3));
    if (n == 4) return compare_root_to_rational_w(profile, m, Rat(-2));
    if (n == 6) return compare_root_to_rational_w(profile, m, Rat(-1));

    RationalInterval& iv = profile.roots_w[m];
    if (angle_hits_alexander_root(n, profile.wpoly)) {
        // The query w-value is a root of q, so it equals theta_m's root
        // exactly when it falls inside this isolating interval; it can
        // never equal the (non-root) interval endpoints.
        Rat tol(1, 64);
        while (true) {
            RationalInterval c = shifted_cos_bounds(frac, tol);
            if (c.disjoint_from(iv)) return c.lo >= iv.hi ? +1 : -1;
            if (iv.lo < c.lo && c.hi < iv.hi) return 0;
            tol /= 4;
        }
    }

    Rat tol(1, 64);
    while (true) {
        RationalInterval c = shifted_cos_bounds(frac, tol);
        if (c.disjoint_from(iv)) return c.lo >= iv.hi ? +1 : -1;  // larger w = smaller angle
        refine_step(profile.wpoly, iv);
        tol /= 4;
    }
}

AngleFloor floor_angle_multiple(SignatureProfile& profile, unsigned m, const Int& p) {
    if (p < 1) throw Error("floor_angle_multiple: p must be >= 1");
    // Largest j with 2*pi*j/p < theta_m; theta_m in (0, pi), so the
    // answer lies in [0, floor(p/2)].
    Int lo = 0, hi = p / 2 + 1;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        int c = compare_root_to_turn_fraction(profile, m, make_rat(mid, p));
        if (c == 0) return {mid, true};
        if (c > 0)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, false};
}

RationalInterval theta_interval(SignatureProfile& profile, unsigned m, const Rat& width) {
    if (width <= 0) throw Error("theta_interval: width must be positive");
    RationalInterval& iv = profile.roots_w[m];
    // arccos with certified cosine enclosures: maintain rational angles
    // a_lo < theta < a_hi and bisect.
    while (true) {
        Rat v_lo = 1 + iv.lo / 2, v_hi = 1 + iv.hi / 2;  // cos(theta) in [v_lo, v_hi]
        Rat a_lo = 0, a_hi = kPiHi;
        Rat tol = width / 8;
        bool stuck = false;
        while (a_hi - a_lo > width * Rat(3, 4)) {
            Rat mid = (a_lo + a_hi) / 2;
            RationalInterval c = cos_enclosure(mid, tol);
            if (c.lo > v_hi)
                a_lo = mid;  // cos(mid) > cos(theta)  =>  mid < theta
            else if (c.hi < v_lo)
                a_hi = mid;
            else if (tol > width / 1024)
                tol /= 4;
            else {
                stuck = true;  // cos(theta) enclosure too wide: refine w first
                break;
            }
        }
        if (!stuck) return {a_lo, a_hi};
        refine_step(profile.wpoly, iv);
    }
}

int signature_at_angle(SignatureProfile& profile, const Rat& pi_multiple) {
    if (pi_multiple < 0 || pi_multiple > 1)
        throw Error("signature_at_angle: angle must lie in [0, pi]");
    const Rat frac = pi_multiple / 2;
    int count = 0;
    for (unsigned m = 0; m < profile.genus; ++m) {
        int c = compare_root_to_turn_fraction(profile, m, frac);
        if (c == 0)
            throw OnRoot("angle " + to_string(pi_multiple) + "*pi is an Alexander root of " +
                         profile.wpoly.to_string("w"));
        if (c < 0) ++count;  // theta_m < angle
    }
    return 2 * count;
}

namespace {

// theta_m versus a rational radian value; never equal (the root angles
// have algebraic cosine, hence are irrational radians).
int compare_root_to_radians(SignatureProfile& profile, unsigned m, const Rat& radians) {
    if (radians <= 0) return +1;
    if (radians >= kPiHi) return -1;
    RationalInterval& iv = profile.roots_w[m];
    Rat tol(1, 16);
    while (true) {
        RationalInterval cosr = cos_enclosure(radians, tol);
        RationalInterval wq(2 * cosr.lo - 2, 2 * cosr.hi - 2);
        if (wq.disjoint_from(iv)) return iv.hi < wq.lo ? +1 : -1;
        refine_step(profile.wpoly, iv);
        tol /= 4;
    }
}

}  // namespace

int signature_at_angle(SignatureProfile& profile, const RationalInterval& radians) {
    int count = 0;
    for (unsigned m = 0; m < profile.genus; ++m) {
        if (compare_root_to_radians(profile, m, radians.lo) < 0) {
            ++count;  // theta_m < lo <= angle
        } else if (compare_root_to_radians(profile, m, radians.hi) < 0) {
            throw OnRoot("query interval [" + to_string(radians.lo) + ", " + to_string(radians.hi) +
                         "] straddles Alexander root angle #" + std::to_string(m + 1));
        }
    }
    return 2 * count;
}

PSignature p_signature(SignatureProfile& profile, const Int& p) {
    if (p < 1) throw Error("p_signature: p must be >= 1");
    Int total = 0;
    bool coincidence = false;
    for (unsigned m = 0; m < profile.genus; ++m) {
        AngleFloor f = floor_angle_multiple(profile, m, p);
        if (f.coincident) {
            coincidence = true;
            total += 2 * (p - 2 * f.floor);  // average of the two one-sided values
        } else {
            total += 2 * (p - 2 * f.floor - 1);
        }
    }
    return {p, total, coincidence};
}

PSignature p_signature(const PretzelKnot& k, const Int& p) {
    if (k.is_unknot()) {
        if (p < 1) throw Error("p_signature: p must be >= 1");
        return {p, 0, false};  // the signature function of the unknot vanishes
    }
    SignatureProfile profile = signature_profile(k);
    return p_signature(profile, p);
}

int hermitian_signature_oracle(const PretzelKnot& k, double angle) {
    if (k.is_unknot()) return 0;
    if (angle == 0.0) return 0;  // the form vanishes identically at omega = 1
    SeifertMatrix a = seifert_matrix(k);
    const auto n = static_cast<Eigen::Index>(a.dim);
    Eigen::MatrixXcd h(n, n);
    const std::complex<double> omega = std::polar(1.0, angle);
    const std::complex<double> f = 1.0 - omega, fbar = 1.0 - std::conj(omega);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            double aij = a.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
            double aji = a.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)).get_d();
            h(i, j) = f * aij + fbar * aji;
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd ev = solver.eigenvalues();
    const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
    int signature = 0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (std::abs(ev[i]) < 1e-9 * scale)
            throw PrecisionExhausted("eigenvalue " + std::to_string(ev[i]) +
                                     " too close to zero at angle " + std::to_string(angle));
        signature += ev[i] > 0 ? 1 : -1;
    }
    return signature;
}

std::vector<SigmaRow> sigma_ratio_table(const PretzelKnot& k, unsigned pmax, unsigned jobs) {
    if (pmax < 1) throw Error("sigma_ratio_table: pmax must be >= 1");
    std::vector<SigmaRow> rows(pmax);
    if (k.is_unknot()) {
        for (unsigned p = 1; p <= pmax; ++p) rows[p - 1] = {Int(p), 0, Rat(0), false};
        return rows;
    }
    SignatureProfile master = signature_profile(k);
    auto fill = [&](SignatureProfile& profile, unsigned p_begin, unsigned p_step) {
        for (unsigned p = p_begin; p <= pmax; p += p_step) {
            PSignature s = p_signature(profile, Int(p));
            rows[p - 1] = {Int(p), s.value, make_rat(s.value, Int(p)), s.coincidence};
        }
    };
    if (jobs <= 1) {
        fill(master, 1, 1);
    } else {
        std::mutex error_mutex;
        std::exception_ptr first_error;
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back([&, t] {
                try {
                    SignatureProfile local = master;  // copy-on-refine
                    fill(local, t + 1, jobs);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return rows;
}

Rat signature_density_upper_bound(SignatureProfile& profile, const Int& scale) {
    if (scale < 2) throw Error("signature_density_upper_bound: scale must be >= 2");
    // Certified lower bounds on each theta_m give an upper bound on
    // L = sum 2(1 - theta_m/pi) exceeding it by less than 2g/scale.
    const Rat width = make_rat(Int(1), scale);
    Rat bound = 0;
    for (unsigned m = 0; m < profile.genus; ++m) {
        RationalInterval theta = theta_interval(profile, m, width);
        Rat lo = theta.lo < 0 ? Rat(0) : theta.lo;
        bound += 2 * (1 - lo / kPiHi);
    }
    return bound;
}

}  // namespace pretzel
