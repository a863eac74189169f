#include "darkstate/analysis.hpp"

#include <cmath>

#include "darkstate/dense_eigen.hpp"
#include "darkstate/linalg.hpp"

namespace darkstate {

const char* to_string(Criterion c) {
    switch (c) {
        case Criterion::DetBdagBZero: return "DetBdagBZero";
        case Criterion::RankDeficient: return "RankDeficient";
        case Criterion::CountingNeLtNg: return "CountingNe<Ng";
    }
    return "?";
}

bool counting_criterion(const Classification& classification) {
    return classification.num_connected() < classification.num_ground();
}

template <Scalar T>
std::size_t rank_B(const BlockHamiltonian<T>& blocks) {
    if constexpr (is_exact_v<T>)
        return rank(blocks.B);
    else
        return numerical_rank(right_svd(blocks.B));
}

template <Scalar T>
T det_BdagB(const BlockHamiltonian<T>& blocks) {
    if constexpr (is_exact_v<T>) {
        return determinant(blocks.B.adjoint() * blocks.B);
    } else {
        // Product of squared singular values: LU on B^dagger B squares the condition number
        // and leaves O(eps) garbage where the exact value is zero.
        double det = 1.0;
        for (double s : right_svd(blocks.B).singular_values) det *= s * s;
        return det;
    }
}

template <Scalar T>
T det_A(const BlockHamiltonian<T>& blocks) {
    return determinant(blocks.A);
}

namespace {

// Float-only zero tests. det(B^dagger B) is the product of sigma_i^2, det A is bounded by the
// product of its row norms (Hadamard).
bool gram_det_negligible(const FloatBlocks& blocks, FloatScalar det) {
    const RightSvd svd = right_svd(blocks.B);
    if (svd.singular_values.empty()) return false;
    const double smax = svd.singular_values.front();
    if (smax == 0.0) return true;
    const double bound = std::pow(smax, 2.0 * static_cast<double>(blocks.num_ground));
    return std::abs(det) <= kFloatRankTolerance * kFloatRankTolerance * bound;
}

std::optional<bool> float_det_A_nonzero(const FloatBlocks& blocks, FloatScalar det) {
    double hadamard = 1.0;
    for (std::size_t i = 0; i < blocks.A.rows(); ++i) {
        double row = 0.0;
        for (const auto& x : blocks.A.row(i)) row += std::norm(x);
        hadamard *= std::sqrt(row);
    }
    if (hadamard == 0.0) return false;
    const double ratio = std::abs(det) / hadamard;
    if (ratio > kFloatRankTolerance) return true;
    if (ratio < 1e-14) return false;
    return std::nullopt;
}

}  // namespace

template <Scalar T>
ExistenceVerdict analyze(const BlockHamiltonian<T>& blocks) {
    ExistenceVerdict v;
    v.num_ground = blocks.num_ground;
    v.num_connected = blocks.num_connected;
    v.rank_B = rank_B(blocks);
    v.dark_dimension = v.num_ground - v.rank_B;
    v.exists = v.dark_dimension >= 1;

    const T gram = det_BdagB(blocks);
    const T det_a = det_A(blocks);
    bool gram_zero = false;
    if constexpr (is_exact_v<T>) {
        gram_zero = gram.is_zero();
        v.det_A_nonzero = !det_a.is_zero();
    } else {
        gram_zero = gram_det_negligible(blocks, gram);
        v.det_A_nonzero = float_det_A_nonzero(blocks, det_a);
    }

    if (gram_zero) v.criteria_fired.push_back(Criterion::DetBdagBZero);
    if (v.rank_B < v.num_ground) v.criteria_fired.push_back(Criterion::RankDeficient);
    if (counting_criterion(blocks)) v.criteria_fired.push_back(Criterion::CountingNeLtNg);
    return v;
}

DeterminantIdentity determinant_identity(const ExactBlocks& blocks) {
    const ExactScalar det_a = det_A(blocks);
    if (det_a.is_zero()) throw SingularA();

    DeterminantIdentity id;
    id.det_H = determinant(full_hamiltonian(blocks));

    const ExactMatrix schur = -(blocks.B.adjoint() * solve(blocks.A, blocks.B));
    id.schur_form = det_a * determinant(schur);

    const ExactScalar gram = det_BdagB(blocks);
    id.gram_form = blocks.num_ground % 2 == 0 ? gram : -gram;
    id.gram_form_parity_n = blocks.size() % 2 == 0 ? gram : -gram;
    return id;
}

template std::size_t rank_B<ExactScalar>(const ExactBlocks&);
template std::size_t rank_B<FloatScalar>(const FloatBlocks&);
template ExactScalar det_BdagB<ExactScalar>(const ExactBlocks&);
template FloatScalar det_BdagB<FloatScalar>(const FloatBlocks&);
template ExactScalar det_A<ExactScalar>(const ExactBlocks&);
template FloatScalar det_A<FloatScalar>(const FloatBlocks&);
template ExistenceVerdict analyze<ExactScalar>(const ExactBlocks&);
template ExistenceVerdict analyze<FloatScalar>(const FloatBlocks&);

}  // namespace darkstate
