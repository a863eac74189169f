#pragma once

#include <vector>

#include "darkstate/matrix.hpp"

namespace darkstate {

/// Eigenvalues ascending; eigenvector k is column k of `vectors`.
struct HermitianEigen {
    std::vector<double> values;
    FloatMatrix vectors;
};

/// Cyclic complex Jacobi. Intended for the small dense matrices this project produces (N <= 64).
HermitianEigen hermitian_eigen(const FloatMatrix& h);

/// Singular values (descending, one per column of the input, zero-padded when rows < cols)
/// and the full set of right-singular vectors as columns of `right`.
struct RightSvd {
    std::vector<double> singular_values;
    FloatMatrix right;
};

/// One-sided (Hestenes) Jacobi SVD.
RightSvd right_svd(const FloatMatrix& m);

/// Number of singular values above kFloatRankTolerance * sigma_max.
std::size_t numerical_rank(const RightSvd& svd);

}  // namespace darkstate
