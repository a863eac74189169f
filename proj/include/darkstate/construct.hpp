#pragma once

#include <stdexcept>
#include <vector>

#include "darkstate/blocks.hpp"

namespace darkstate {

/// Amplitudes on the ground manifold, indexed like `ids`.
template <Scalar T>
struct GroundVector {
    std::vector<LevelId> ids;
    std::vector<T> amplitudes;
    RealOf<T> norm_squared{};
};

/// The b-vectors |b_i> = sum_j conj(B~_ij) |g_j>, reduced to an independent echelon set.
/// `overlaps` holds <b_i|g_j> (that is, the echelon rows of B itself), one row per vector.
template <Scalar T>
struct BVectorSet {
    std::vector<LevelId> ground_ids;
    Matrix<T> overlaps;

    [[nodiscard]] std::size_t independent_count() const { return overlaps.rows(); }
    [[nodiscard]] std::size_t num_ground() const { return ground_ids.size(); }
    /// |b_i> as ground vectors (conjugated overlap rows).
    [[nodiscard]] std::vector<GroundVector<T>> vectors() const;
};

enum class DarkMethod { CrossProduct, ProjectedCrossProduct, NullSpace };
enum class KeepStrategy { First, All };

const char* to_string(DarkMethod m);

template <Scalar T>
struct DarkStateResult {
    GroundVector<T> raw;          // determinant expansion as computed, unnormalized
    GroundVector<T> ground_part;  // canonical form, see canonicalize()
    std::vector<T> full_vector;   // embedded in block-basis order
    DarkMethod method = DarkMethod::CrossProduct;
    std::vector<LevelId> kept_columns;
};

enum class ConstructionErrorKind { RankDrop, NoDarkState, IndependenceLost };

class ConstructionError : public std::runtime_error {
public:
    ConstructionError(ConstructionErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ConstructionErrorKind kind() const { return kind_; }

private:
    ConstructionErrorKind kind_;
};

/// Conjugated nonzero rows of B, Gaussian-eliminated to an independent set (N_b <= N_e).
/// B = 0 gives the empty set: every ground vector is then dark.
template <Scalar T>
BVectorSet<T> b_vectors(const BlockHamiltonian<T>& blocks);

/// Same, from arbitrary overlap rows <b_i|g_j> (used for recombined sets).
template <Scalar T>
BVectorSet<T> b_vectors_from_overlaps(std::vector<LevelId> ground_ids, const Matrix<T>& overlaps);

/// Pivot columns of the echelon form of `bset`, as ground-level ids.
template <Scalar T>
std::vector<LevelId> pivot_columns(const BVectorSet<T>& bset);

/// Pivot columns plus one extra non-pivot column. First: the lowest-index extra column only;
/// All: one choice per non-pivot column, together spanning the whole dark subspace.
template <Scalar T>
std::vector<std::vector<LevelId>> select_kept_columns(const BVectorSet<T>& bset, KeepStrategy strategy);

/// Generalized cross product: cofactor expansion of
///     [ |g_k>  ...       ]
///     [ <b_i|g_k> ...    ]   (k over kept columns)
/// along the symbolic first row. Amplitude on the k'-th kept column (0-based) is
/// (-1)^k' det(minor); deleted columns get 0. `bset` is used as given, without reduction.
/// Throws ConstructionError (NoDarkState if N_b >= N_g, RankDrop if the kept block loses rank).
template <Scalar T>
DarkStateResult<T> cross_product_dark(const BVectorSet<T>& bset, const std::vector<LevelId>& kept_columns);

/// Projects the deleted ground kets out of every b-vector (P = I - sum |g_j><g_j|), then takes
/// the cross product in the remaining subspace. Throws IndependenceLost if the projected
/// vectors become dependent.
template <Scalar T>
DarkStateResult<T> projected_cross_product(const BVectorSet<T>& bset, const std::vector<LevelId>& delete_set);

/// Basis of ker B: exact reduced-echelon back-substitution, or right-singular vectors whose
/// singular value is at most kFloatRankTolerance * sigma_max (float). Vectors are canonicalized.
template <Scalar T>
std::vector<GroundVector<T>> null_space(const BlockHamiltonian<T>& blocks);

/// P|D_g>: zeros on excited indices, ground amplitudes placed in block-basis order.
template <Scalar T>
std::vector<T> embed(const GroundVector<T>& ground, const Classification& classification);
template <Scalar T>
std::vector<T> embed(const GroundVector<T>& ground, const BlockHamiltonian<T>& blocks);

/// Exact: divided by the leading nonzero amplitude, then content-reduced, so every nonzero
/// complex multiple of a vector maps to the same Gaussian-integer vector. Float: unit norm
/// with the first non-negligible amplitude real and positive. norm_squared is recomputed.
template <Scalar T>
GroundVector<T> canonicalize(GroundVector<T> v);

/// Dark states for the CLI `solve` path: one per kept-column choice of `strategy`; the
/// all-columns case uses cross_product_dark, the others projected_cross_product. Falls back
/// to null_space if a construction step fails. Empty when no dark state exists.
template <Scalar T>
std::vector<DarkStateResult<T>> construct_dark_states(const BlockHamiltonian<T>& blocks, KeepStrategy strategy);

}  // namespace darkstate
