#pragma once

#include <vector>

#include "darkstate/matrix.hpp"
#include "darkstate/network.hpp"
#include "darkstate/rotating_frame.hpp"

namespace darkstate {

/// H = [[A, B], [B^dagger, 0]] in the basis
///   disconnected-excited ++ connected-excited ++ ground,
/// so B = [0; B~] with the all-zero rows on top. hbar = 1.
template <Scalar T>
struct BlockHamiltonian {
    std::vector<LevelId> basis;
    std::size_t num_disconnected = 0;
    std::size_t num_connected = 0;
    std::size_t num_ground = 0;
    Matrix<T> A;  // (N - N_g) x (N - N_g), Hermitian, A_nn = Delta_n
    Matrix<T> B;  // (N - N_g) x N_g

    [[nodiscard]] std::size_t size() const { return basis.size(); }
    [[nodiscard]] std::size_t num_excited() const { return num_disconnected + num_connected; }
    [[nodiscard]] std::vector<LevelId> ground_ids() const {
        return {basis.end() - static_cast<std::ptrdiff_t>(num_ground), basis.end()};
    }
    [[nodiscard]] std::vector<LevelId> excited_ids() const {
        return {basis.begin(), basis.begin() + static_cast<std::ptrdiff_t>(num_excited())};
    }
};

using ExactBlocks = BlockHamiltonian<ExactScalar>;
using FloatBlocks = BlockHamiltonian<FloatScalar>;

/// Basis order used by assemble().
std::vector<LevelId> block_basis(const Classification& classification);

/// Materializes A and B. Off-diagonal entries take H[from][to] = Omega, H[to][from] = Omega*.
template <Scalar T>
BlockHamiltonian<T> assemble(const LevelNetwork& network, const Classification& classification,
                             const RotatingFrame<RealOf<T>>& frame);

/// Builds blocks directly from A and B (test fixtures, random generators). Basis ids are
/// 1..N in block order; rows of B that are entirely zero count as disconnected only if
/// they lead the matrix.
template <Scalar T>
BlockHamiltonian<T> blocks_from_matrices(Matrix<T> A, Matrix<T> B);

/// [[A, B], [B^dagger, 0]].
template <Scalar T>
Matrix<T> full_hamiltonian(const BlockHamiltonian<T>& blocks);

FloatBlocks to_float(const ExactBlocks& blocks);

}  // namespace darkstate
