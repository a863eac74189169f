#include "darkstate/linalg.hpp"

#include <cmath>
#include <numeric>

namespace darkstate {

BareissResult bareiss(ExactMatrix m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t steps = std::min(rows, cols);
    ExactScalar previous{1};
    bool odd_swaps = false;

    BareissResult result;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pr = rows;
        std::size_t pc = cols;
        for (std::size_t j = k; j < cols && pr == rows; ++j)
            for (std::size_t i = k; i < rows; ++i)
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == rows) break;
        if (pr != k) {
            m.swap_rows(pr, k);
            odd_swaps = !odd_swaps;
        }
        if (pc != k) {
            m.swap_cols(pc, k);
            odd_swaps = !odd_swaps;
        }
        ++result.rank;
        const ExactScalar pivot = m(k, k);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const ExactScalar lead = m(i, k);
            for (std::size_t j = k + 1; j < cols; ++j) m(i, j) = (pivot * m(i, j) - lead * m(k, j)) / previous;
            m(i, k) = ExactScalar{};
        }
        previous = pivot;
    }

    if (rows == cols && result.rank == rows) {
        result.determinant = rows == 0 ? ExactScalar{1} : m(rows - 1, rows - 1);
        if (odd_swaps) result.determinant = -result.determinant;
    }
    return result;
}

std::size_t rank(const ExactMatrix& m) { return bareiss(m).rank; }

ExactScalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
    return bareiss(m).determinant;
}

FloatScalar determinant(const FloatMatrix& input) {
    if (input.rows() != input.cols()) throw std::invalid_argument("determinant: matrix is not square");
    FloatMatrix m = input;
    const std::size_t n = m.rows();
    FloatScalar det{1.0};
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
        if (m(p, k) == 0.0) return 0.0;
        if (p != k) {
            m.swap_rows(p, k);
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const FloatScalar f = m(i, k) / m(k, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = a.rows();
    const std::size_t m = b.cols();
    ExactMatrix aug(n, n + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, n + j) = b(i, j);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && aug(p, k).is_zero()) ++p;
        if (p == n) throw std::domain_error("solve: singular matrix");
        aug.swap_rows(p, k);
        const ExactScalar inv = ExactScalar{1} / aug(k, k);
        for (std::size_t j = k; j < n + m; ++j) aug(k, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || aug(i, k).is_zero()) continue;
            const ExactScalar f = aug(i, k);
            for (std::size_t j = k; j < n + m; ++j) aug(i, j) -= f * aug(k, j);
        }
    }
    ExactMatrix x(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = aug(i, n + j);
    return x;
}

template <Scalar T>
RowEchelon<T> row_echelon(const Matrix<T>& input) {
    Matrix<T> m = input;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    double threshold = 0.0;
    if constexpr (!is_exact_v<T>) {
        double scale = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) scale = std::max(scale, std::abs(m(i, j)));
        threshold = kFloatRankTolerance * scale;
    }

    RowEchelon<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if constexpr (is_exact_v<T>) {
                if (!m(i, c).is_zero()) {
                    p = i;
                    break;
                }
            } else {
                if (std::abs(m(i, c)) > threshold && (p == rows || std::abs(m(i, c)) > std::abs(m(p, c)))) p = i;
            }
        }
        if (p == rows) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (is_zero(m(i, c))) continue;
            const T f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
            m(i, c) = T{};
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.rows = Matrix<T>(r, cols);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < cols; ++j) out.rows(i, j) = m(i, j);
    return out;
}

template RowEchelon<ExactScalar> row_echelon(const ExactMatrix&);
template RowEchelon<FloatScalar> row_echelon(const FloatMatrix&);

std::vector<std::vector<ExactScalar>> exact_null_space(const ExactMatrix& m) {
    RowEchelon<ExactScalar> echelon = row_echelon(m);
    ExactMatrix& r = echelon.rows;
    const auto& pivots = echelon.pivot_columns;
    const std::size_t cols = m.cols();

    // Back-substitute to reduced form: unit pivots, zeros above them.
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t c = pivots[k];
        const ExactScalar inv = ExactScalar{1} / r(k, c);
        for (std::size_t j = c; j < cols; ++j) r(k, j) *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (r(i, c).is_zero()) continue;
            const ExactScalar f = r(i, c);
            for (std::size_t j = c; j < cols; ++j) r(i, j) -= f * r(k, j);
        }
    }

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<ExactScalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<ExactScalar> v(cols);
        v[free] = ExactScalar{1};
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<ExactScalar> content_reduce(std::vector<ExactScalar> v) {
    mpz_class lcm_den = 1;
    for (const auto& z : v) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), z.real().denominator().get_mpz_t());
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), z.imag().denominator().get_mpz_t());
    }
    mpz_class gcd_num = 0;
    for (const auto& z : v) {
        const mpz_class re = z.real().numerator() * (lcm_den / z.real().denominator());
        const mpz_class im = z.imag().numerator() * (lcm_den / z.imag().denominator());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), re.get_mpz_t());
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), im.get_mpz_t());
    }
    if (gcd_num == 0) return v;

    ExactScalar scale{Rational(mpq_class(lcm_den, gcd_num))};
    for (const auto& z : v) {
        if (z.is_zero()) continue;
        // Pick the unit u with u*z in the quadrant re > 0, im >= 0.
        const int re = z.real().sign();
        const int im = z.imag().sign();
        if (re > 0 && im >= 0)
            break;
        else if (re <= 0 && im > 0)
            scale *= ExactScalar(0, -1);  // (a+bi)(-i) = b - ai
        else if (re < 0 && im <= 0)
            scale = -scale;
        else
            scale *= ExactScalar(0, 1);
        break;
    }
    for (auto& z : v) z *= scale;
    return v;
}

bool proportional(const std::vector<ExactScalar>& u, const std::vector<ExactScalar>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    return true;
}

}  // namespace darkstate
