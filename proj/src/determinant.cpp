#include "pretzelccs/determinant.hpp"

namespace pretzel {

LaurentPolynomial bareiss_det(LaurentMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw Error("bareiss_det: matrix is not square");
    if (n == 0) return LaurentPolynomial::monomial(0, 1);

    int sign = 1;
    LaurentPolynomial prev = LaurentPolynomial::monomial(0, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};  // singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPolynomial t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = t.is_zero() ? LaurentPolynomial{} : t.divide_exact(prev);
            }
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    LaurentPolynomial det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

}  // namespace pretzel
