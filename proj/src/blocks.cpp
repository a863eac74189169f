#include "darkstate/blocks.hpp"

#include <map>

namespace darkstate {

std::vector<LevelId> block_basis(const Classification& classification) {
    std::vector<LevelId> basis = classification.disconnected_excited_ids;
    basis.insert(basis.end(), classification.connected_excited_ids.begin(), classification.connected_excited_ids.end());
    basis.insert(basis.end(), classification.ground_ids.begin(), classification.ground_ids.end());
    return basis;
}

template <Scalar T>
BlockHamiltonian<T> assemble(const LevelNetwork& network, const Classification& classification,
                             const RotatingFrame<RealOf<T>>& frame) {
    BlockHamiltonian<T> h;
    h.basis = block_basis(classification);
    h.num_disconnected = classification.disconnected_excited_ids.size();
    h.num_connected = classification.connected_excited_ids.size();
    h.num_ground = classification.ground_ids.size();

    const std::size_t ne = h.num_excited();
    std::map<LevelId, std::size_t> position;
    for (std::size_t i = 0; i < h.basis.size(); ++i) position[h.basis[i]] = i;

    h.A = Matrix<T>(ne, ne);
    h.B = Matrix<T>(ne, h.num_ground);
    for (std::size_t i = 0; i < ne; ++i) h.A(i, i) = T(frame.detuning.at(h.basis[i]));

    using std::conj;
    for (const auto& t : network.transitions) {
        const T omega = from_exact<T>(t.amplitude);
        const std::size_t r = position.at(t.from);
        const std::size_t c = position.at(t.to);
        if (r < ne && c < ne) {
            h.A(r, c) = omega;
            h.A(c, r) = conj(omega);
        } else if (r < ne) {
            h.B(r, c - ne) = omega;
        } else if (c < ne) {
            h.B(c, r - ne) = conj(omega);
        }
    }
    return h;
}

template <Scalar T>
BlockHamiltonian<T> blocks_from_matrices(Matrix<T> A, Matrix<T> B) {
    if (A.rows() != A.cols() || A.rows() != B.rows())
        throw std::invalid_argument("blocks_from_matrices: A must be square with as many rows as B");
    BlockHamiltonian<T> h;
    h.num_ground = B.cols();
    std::size_t leading_zero_rows = 0;
    for (; leading_zero_rows < B.rows(); ++leading_zero_rows) {
        bool zero = true;
        for (const auto& x : B.row(leading_zero_rows)) zero = zero && is_zero(x);
        if (!zero) break;
    }
    h.num_disconnected = leading_zero_rows;
    h.num_connected = B.rows() - leading_zero_rows;
    for (std::size_t i = 0; i < A.rows() + B.cols(); ++i) h.basis.push_back(static_cast<LevelId>(i + 1));
    h.A = std::move(A);
    h.B = std::move(B);
    return h;
}

template <Scalar T>
Matrix<T> full_hamiltonian(const BlockHamiltonian<T>& blocks) {
    const std::size_t ne = blocks.num_excited();
    const std::size_t n = blocks.size();
    using std::conj;
    Matrix<T> h(n, n);
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < ne; ++j) h(i, j) = blocks.A(i, j);
    for (std::size_t i = 0; i < ne; ++i)
        for (std::size_t j = 0; j < blocks.num_ground; ++j) {
            h(i, ne + j) = blocks.B(i, j);
            h(ne + j, i) = conj(blocks.B(i, j));
        }
    return h;
}

FloatBlocks to_float(const ExactBlocks& blocks) {
    FloatBlocks f;
    f.basis = blocks.basis;
    f.num_disconnected = blocks.num_disconnected;
    f.num_connected = blocks.num_connected;
    f.num_ground = blocks.num_ground;
    f.A = to_float(blocks.A);
    f.B = to_float(blocks.B);
    return f;
}

template ExactBlocks assemble<ExactScalar>(const LevelNetwork&, const Classification&, const RotatingFrame<Rational>&);
template FloatBlocks assemble<FloatScalar>(const LevelNetwork&, const Classification&, const RotatingFrame<double>&);
template ExactBlocks blocks_from_matrices<ExactScalar>(ExactMatrix, ExactMatrix);
template FloatBlocks blocks_from_matrices<FloatScalar>(FloatMatrix, FloatMatrix);
template ExactMatrix full_hamiltonian<ExactScalar>(const ExactBlocks&);
template FloatMatrix full_hamiltonian<FloatScalar>(const FloatBlocks&);

}  // namespace darkstate
