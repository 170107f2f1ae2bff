#include "pretzelccs/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace pretzel {

namespace {
std::mutex cache_mutex;
std::map<unsigned, IntPolynomial> phi_cache;

IntPolynomial cyclotomic_locked(unsigned n) {
    auto it = phi_cache.find(n);
    if (it != phi_cache.end()) return it->second;
    IntPolynomial result;
    if (n == 1) {
        result = IntPolynomial({Int(-1), Int(1)});
    } else {
        // (x^n - 1) / prod_{d | n, d < n} Phi_d
        std::vector<Int> c(n + 1, Int(0));
        c[0] = -1;
        c[n] = 1;
        result = IntPolynomial(std::move(c));
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) result = result.divide_exact(cyclotomic_locked(d));
    }
    phi_cache[n] = result;
    return result;
}
}  // namespace

IntPolynomial cyclotomic(unsigned n) {
    if (n == 0) throw Error("cyclotomic: n must be positive");
    std::lock_guard lock(cache_mutex);
    return cyclotomic_locked(n);
}

IntPolynomial cos_two_pi_minimal_poly(unsigned n) {
    if (n == 0) throw Error("cos_two_pi_minimal_poly: n must be positive");
    if (n == 1) return IntPolynomial({Int(-2), Int(1)});  // y - 2
    if (n == 2) return IntPolynomial({Int(2), Int(1)});   // y + 2
    // Phi_n is palindromic of even degree for n >= 3, so
    // Phi_n(x) * x^{-deg/2} is a polynomial in y = x + x^{-1}.
    IntPolynomial phi = cyclotomic(n);
    long half = phi.degree() / 2;
    return LaurentPolynomial::from_polynomial(phi, -half).to_polynomial_in(+1);
}

IntPolynomial shifted_cos_minimal_poly(unsigned n) {
    return cos_two_pi_minimal_poly(n).compose_linear(Int(1), Int(2));
}

}  // namespace pretzel
