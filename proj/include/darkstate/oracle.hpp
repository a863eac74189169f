#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "darkstate/dense_eigen.hpp"
#include "darkstate/network.hpp"

namespace darkstate {

inline constexpr double kOracleTolerance = 1e-9;

class NotHermitian : public std::invalid_argument {
public:
    explicit NotHermitian(double deviation)
        : std::invalid_argument("NotHermitian: max |H - H^dagger| = " + std::to_string(deviation)),
          deviation_(deviation) {}
    [[nodiscard]] double deviation() const { return deviation_; }

private:
    double deviation_;
};

/// Full spectral decomposition of a Hermitian H. Rejects inputs whose largest
/// |H_ij - conj(H_ji)| exceeds 1e-12 * ||H||_F.
HermitianEigen eigendecompose(const FloatMatrix& h);

struct DarkCandidate {
    double eigenvalue = 0.0;
    std::vector<FloatScalar> vector;  // unit norm, block-basis order
    double excited_leakage = 0.0;     // norm of the excited-index amplitudes
};

struct OracleReport {
    std::vector<double> eigenvalues;
    std::size_t zero_eigenvalue_count = 0;
    std::vector<DarkCandidate> dark_candidates;
    bool matched = false;       // every candidate passes verify_dark at the detection tolerance
    double max_residual = 0.0;  // max ||H v|| / ||H||_F over candidates
};

/// Brute-force dark-state search on H given in block-basis order (excited levels first).
/// Eigenvalues with |lambda| <= tol * ||H||_F form the zero cluster; inside it the basis is
/// rotated (SVD of the excited-index block) so each candidate has minimal excited leakage,
/// and candidates with leakage <= tol are reported.
OracleReport detect_dark(const FloatMatrix& h, std::size_t num_excited, double tol = kOracleTolerance);
OracleReport detect_dark(const FloatMatrix& h, const Classification& classification, double tol = kOracleTolerance);

/// ||H D||_2 / (||D|| ||H||_F).
double verify_dark(const FloatMatrix& h, std::span<const FloatScalar> d);

}  // namespace darkstate
