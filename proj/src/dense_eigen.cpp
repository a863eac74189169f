#include "darkstate/dense_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "darkstate/linalg.hpp"

namespace darkstate {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const FloatMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const FloatMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("hermitian_eigen: matrix is not square");
    const std::size_t n = h.rows();
    FloatMatrix a = h;
    FloatMatrix v = FloatMatrix::identity(n);
    const double scale = frobenius_norm(h);
    const double eps = std::numeric_limits<double>::epsilon();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= eps * scale) break;
        const double negligible = eps * scale / static_cast<double>(n * n);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag <= negligible) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                // U = [[c, s], [-s e^{-i phi}, c e^{-i phi}]] diagonalizes [[app, apq], [apq*, aqq]]
                // where apq = |apq| e^{i phi}.
                const FloatScalar phase = std::polar(1.0, std::arg(a(p, q)));
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const FloatScalar eq = std::conj(phase);

                // A <- A U (columns p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const FloatScalar akp = a(k, p);
                    const FloatScalar akq = a(k, q);
                    a(k, p) = c * akp - s * eq * akq;
                    a(k, q) = s * akp + c * eq * akq;
                }
                // A <- U^dagger A (rows p, q)
                for (std::size_t k = 0; k < n; ++k) {
                    const FloatScalar apk = a(p, k);
                    const FloatScalar aqk = a(q, k);
                    a(p, k) = c * apk - s * phase * aqk;
                    a(q, k) = s * apk + c * phase * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const FloatScalar vkp = v(k, p);
                    const FloatScalar vkq = v(k, q);
                    v(k, p) = c * vkp - s * eq * vkq;
                    v(k, q) = s * vkp + c * eq * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out;
    out.vectors = FloatMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.values.push_back(a(order[k], order[k]).real());
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

RightSvd right_svd(const FloatMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    FloatMatrix w = m;
    FloatMatrix v = FloatMatrix::identity(cols);
    const double eps = std::numeric_limits<double>::epsilon();
    // Columns below this norm are numerically zero; rotating them only amplifies rounding.
    const double floor = eps * eps * frobenius_norm(m) * frobenius_norm(m);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < cols; ++p) {
            for (std::size_t q = p + 1; q < cols; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                FloatScalar gamma = 0.0;
                for (std::size_t k = 0; k < rows; ++k) {
                    alpha += std::norm(w(k, p));
                    beta += std::norm(w(k, q));
                    gamma += std::conj(w(k, p)) * w(k, q);
                }
                const double g = std::abs(gamma);
                if (alpha <= floor || beta <= floor) continue;
                if (g == 0.0 || g <= eps * std::sqrt(alpha) * std::sqrt(beta)) continue;
                rotated = true;
                // Rotate (w_p, e^{-i phi} w_q) with the real Hestenes rotation.
                const FloatScalar eq = std::polar(1.0, -std::arg(gamma));
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t k = 0; k < rows; ++k) {
                    const FloatScalar wp = w(k, p);
                    const FloatScalar wq = eq * w(k, q);
                    w(k, p) = c * wp - s * wq;
                    w(k, q) = s * wp + c * wq;
                }
                for (std::size_t k = 0; k < cols; ++k) {
                    const FloatScalar vp = v(k, p);
                    const FloatScalar vq = eq * v(k, q);
                    v(k, p) = c * vp - s * vq;
                    v(k, q) = s * vp + c * vq;
                }
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(cols, 0.0);
    for (std::size_t j = 0; j < cols; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < rows; ++k) s += std::norm(w(k, j));
        sigma[j] = std::sqrt(s);
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return sigma[i] > sigma[j]; });

    RightSvd out;
    out.right = FloatMatrix(cols, cols);
    for (std::size_t k = 0; k < cols; ++k) {
        out.singular_values.push_back(sigma[order[k]]);
        for (std::size_t i = 0; i < cols; ++i) out.right(i, k) = v(i, order[k]);
    }
    return out;
}

std::size_t numerical_rank(const RightSvd& svd) {
    if (svd.singular_values.empty() || svd.singular_values.front() == 0.0) return 0;
    const double cutoff = kFloatRankTolerance * svd.singular_values.front();
    return static_cast<std::size_t>(std::count_if(svd.singular_values.begin(), svd.singular_values.end(),
                                                  [&](double s) { return s > cutoff; }));
}

}  // namespace darkstate
