#include "darkstate/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace darkstate {

HermitianEigen eigendecompose(const FloatMatrix& h) {
    if (h.rows() != h.cols()) throw std::invalid_argument("eigendecompose: matrix is not square");
    double deviation = 0.0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i; j < h.cols(); ++j) deviation = std::max(deviation, std::abs(h(i, j) - std::conj(h(j, i))));
    if (deviation > 1e-12 * frobenius_norm(h)) throw NotHermitian(deviation);
    return hermitian_eigen(h);
}

double verify_dark(const FloatMatrix& h, std::span<const FloatScalar> d) {
    const double hn = frobenius_norm(h);
    double dn = 0.0;
    for (const auto& x : d) dn += std::norm(x);
    dn = std::sqrt(dn);
    if (hn == 0.0) return 0.0;
    if (dn == 0.0) throw std::invalid_argument("verify_dark: zero vector");
    double r = 0.0;
    for (const auto& x : h.apply(d)) r += std::norm(x);
    return std::sqrt(r) / (dn * hn);
}

OracleReport detect_dark(const FloatMatrix& h, std::size_t num_excited, double tol) {
    const HermitianEigen eig = eigendecompose(h);
    const double hn = frobenius_norm(h);
    const std::size_t n = h.rows();

    OracleReport report;
    report.eigenvalues = eig.values;

    std::vector<std::size_t> cluster;
    for (std::size_t k = 0; k < n; ++k)
        if (std::abs(eig.values[k]) <= tol * hn || hn == 0.0) cluster.push_back(k);
    report.zero_eigenvalue_count = cluster.size();

    if (!cluster.empty()) {
        // Excited-index block of the cluster; its right-singular vectors with small singular
        // values are the combinations that live on the ground manifold.
        FloatMatrix excited(num_excited, cluster.size());
        for (std::size_t i = 0; i < num_excited; ++i)
            for (std::size_t c = 0; c < cluster.size(); ++c) excited(i, c) = eig.vectors(i, cluster[c]);
        const RightSvd svd = right_svd(excited);

        for (std::size_t k = 0; k < cluster.size(); ++k) {
            const double leakage = svd.singular_values[k];
            if (leakage > tol) continue;
            DarkCandidate cand;
            cand.excited_leakage = leakage;
            cand.vector.assign(n, FloatScalar{});
            for (std::size_t c = 0; c < cluster.size(); ++c) {
                const FloatScalar coeff = svd.right(c, k);
                cand.eigenvalue += std::norm(coeff) * eig.values[cluster[c]];
                for (std::size_t i = 0; i < n; ++i) cand.vector[i] += coeff * eig.vectors(i, cluster[c]);
            }
            report.dark_candidates.push_back(std::move(cand));
        }
    }

    report.matched = true;
    for (const auto& cand : report.dark_candidates) {
        const double r = verify_dark(h, cand.vector);
        report.max_residual = std::max(report.max_residual, r);
        report.matched = report.matched && r <= tol && cand.excited_leakage <= tol;
    }
    return report;
}

OracleReport detect_dark(const FloatMatrix& h, const Classification& classification, double tol) {
    return detect_dark(h, classification.num_excited(), tol);
}

}  // namespace darkstate
