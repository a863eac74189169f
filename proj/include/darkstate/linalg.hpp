#pragma once

#include <vector>

#include "darkstate/matrix.hpp"

namespace darkstate {

/// Relative threshold below which a float pivot or singular value counts as zero.
inline constexpr double kFloatRankTolerance = 1e-10;

/// Rank and (for square input) determinant from fraction-free Bareiss elimination with
/// full pivoting. Every intermediate division is exact.
struct BareissResult {
    std::size_t rank = 0;
    ExactScalar determinant;  // 0 when not square or rank-deficient
};

BareissResult bareiss(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);
ExactScalar determinant(const ExactMatrix& m);
/// LU with partial pivoting.
FloatScalar determinant(const FloatMatrix& m);

/// X with a X = b (Gauss-Jordan). Throws std::domain_error when a is singular.
ExactMatrix solve(const ExactMatrix& a, const ExactMatrix& b);

/// Nonzero rows of a row-echelon form of `m` plus the pivot column of each row.
/// Rows are processed top-down; exact input uses the first nonzero candidate as pivot,
/// float input the largest modulus above kFloatRankTolerance * max|m_ij|.
template <Scalar T>
struct RowEchelon {
    Matrix<T> rows;
    std::vector<std::size_t> pivot_columns;
};

template <Scalar T>
RowEchelon<T> row_echelon(const Matrix<T>& m);

/// Basis of {v : m v = 0} from the reduced row-echelon form: one vector per free column,
/// with a 1 on that column.
std::vector<std::vector<ExactScalar>> exact_null_space(const ExactMatrix& m);

/// Smallest positive rational c such that c * v has Gaussian-integer entries with gcd 1 over
/// all real and imaginary parts, then multiplied by a unit in {1, i, -1, -i} so that the
/// first nonzero entry has positive real part and nonnegative imaginary part.
/// Two vectors that differ by a positive-rational or unit factor map to the same result.
std::vector<ExactScalar> content_reduce(std::vector<ExactScalar> v);

/// True iff u and v are (exactly) linearly dependent.
bool proportional(const std::vector<ExactScalar>& u, const std::vector<ExactScalar>& v);

}  // namespace darkstate
