#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darkstate/blocks.hpp"

namespace darkstate {

enum class Criterion { DetBdagBZero, RankDeficient, CountingNeLtNg };

const char* to_string(Criterion c);

/// Dark-state existence decided from B alone.
struct ExistenceVerdict {
    bool exists = false;
    std::size_t rank_B = 0;
    std::size_t num_ground = 0;
    std::size_t num_connected = 0;
    std::size_t dark_dimension = 0;  // N_g - rank B
    std::vector<Criterion> criteria_fired;
    /// nullopt when the float regime cannot tell.
    std::optional<bool> det_A_nonzero;

    /// det A = 0 breaks the determinant argument; the verdict then stands only once the
    /// eigendecomposition oracle agrees.
    [[nodiscard]] bool requires_oracle() const { return det_A_nonzero != true; }
};

/// Exact: Bareiss rank. Float: singular values above kFloatRankTolerance * sigma_max.
template <Scalar T>
std::size_t rank_B(const BlockHamiltonian<T>& blocks);

/// det(B^dagger B); real and nonnegative.
template <Scalar T>
T det_BdagB(const BlockHamiltonian<T>& blocks);

/// N_e < N_g. Sufficient for existence, not necessary.
bool counting_criterion(const Classification& classification);
template <Scalar T>
bool counting_criterion(const BlockHamiltonian<T>& blocks) {
    return blocks.num_connected < blocks.num_ground;
}

template <Scalar T>
T det_A(const BlockHamiltonian<T>& blocks);

template <Scalar T>
ExistenceVerdict analyze(const BlockHamiltonian<T>& blocks);

class SingularA : public std::domain_error {
public:
    SingularA() : std::domain_error("SingularA: det A = 0, the Schur-complement identity does not apply") {}
};

/// det H against its block factorizations:
///   schur_form = det(A) det(-B^dagger A^{-1} B)      (holds whenever det A != 0)
///   gram_form  = (-1)^{N_g} det(B^dagger B)
/// The Gram form is an identity only when B is square; for wide B (N_g > N - N_g) both
/// sides vanish, and for tall B it generally differs from det H.
struct DeterminantIdentity {
    ExactScalar det_H;
    ExactScalar schur_form;
    ExactScalar gram_form;
    ExactScalar gram_form_parity_n;  // (-1)^N det(B^dagger B), the sign as sometimes quoted

    [[nodiscard]] bool schur_equal() const { return det_H == schur_form; }
    [[nodiscard]] bool gram_equal() const { return det_H == gram_form; }
    [[nodiscard]] bool equal() const { return schur_equal() && gram_equal(); }
};

/// Throws SingularA when det A = 0.
DeterminantIdentity determinant_identity(const ExactBlocks& blocks);

}  // namespace darkstate
