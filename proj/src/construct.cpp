#include "darkstate/construct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "darkstate/dense_eigen.hpp"
#include "darkstate/linalg.hpp"

namespace darkstate {

const char* to_string(DarkMethod m) {
    switch (m) {
        case DarkMethod::CrossProduct: return "CrossProduct";
        case DarkMethod::ProjectedCrossProduct: return "ProjectedCrossProduct";
        case DarkMethod::NullSpace: return "NullSpace";
    }
    return "?";
}

namespace {

template <Scalar T>
RealOf<T> norm_squared(const std::vector<T>& v) {
    using std::norm;
    RealOf<T> s{0};
    for (const auto& x : v) s += norm(x);
    return s;
}

template <Scalar T>
std::size_t block_rank(const Matrix<T>& m) {
    if constexpr (is_exact_v<T>)
        return rank(m);
    else
        return row_echelon(m).pivot_columns.size();
}

std::size_t column_of(const std::vector<LevelId>& ids, LevelId id) {
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw std::invalid_argument("level " + std::to_string(id) + " is not a ground level");
    return static_cast<std::size_t>(it - ids.begin());
}

template <Scalar T>
DarkStateResult<T> finish(const std::vector<LevelId>& ground_ids, std::vector<T> raw, DarkMethod method,
                          std::vector<LevelId> kept) {
    DarkStateResult<T> r;
    r.raw.ids = ground_ids;
    r.raw.amplitudes = std::move(raw);
    r.raw.norm_squared = norm_squared(r.raw.amplitudes);
    r.ground_part = canonicalize(r.raw);
    r.method = method;
    r.kept_columns = std::move(kept);
    return r;
}

}  // namespace

template <Scalar T>
std::vector<GroundVector<T>> BVectorSet<T>::vectors() const {
    using std::conj;
    std::vector<GroundVector<T>> out;
    for (std::size_t i = 0; i < overlaps.rows(); ++i) {
        GroundVector<T> g;
        g.ids = ground_ids;
        for (const auto& x : overlaps.row(i)) g.amplitudes.push_back(conj(x));
        g.norm_squared = norm_squared(g.amplitudes);
        out.push_back(std::move(g));
    }
    return out;
}

template <Scalar T>
BVectorSet<T> b_vectors_from_overlaps(std::vector<LevelId> ground_ids, const Matrix<T>& overlaps) {
    if (overlaps.cols() != ground_ids.size()) throw std::invalid_argument("b_vectors: column count mismatch");
    BVectorSet<T> set;
    set.ground_ids = std::move(ground_ids);
    // Zero rows drop out of the echelon form along with dependent ones.
    set.overlaps = row_echelon(overlaps).rows;
    return set;
}

template <Scalar T>
BVectorSet<T> b_vectors(const BlockHamiltonian<T>& blocks) {
    return b_vectors_from_overlaps(blocks.ground_ids(), blocks.B);
}

template <Scalar T>
std::vector<LevelId> pivot_columns(const BVectorSet<T>& bset) {
    std::vector<LevelId> ids;
    for (auto c : row_echelon(bset.overlaps).pivot_columns) ids.push_back(bset.ground_ids[c]);
    return ids;
}

template <Scalar T>
std::vector<std::vector<LevelId>> select_kept_columns(const BVectorSet<T>& bset, KeepStrategy strategy) {
    const std::vector<LevelId> pivots = pivot_columns(bset);
    std::vector<std::vector<LevelId>> choices;
    for (LevelId id : bset.ground_ids) {
        if (std::find(pivots.begin(), pivots.end(), id) != pivots.end()) continue;
        std::vector<LevelId> kept = pivots;
        kept.push_back(id);
        std::sort(kept.begin(), kept.end(), [&](LevelId a, LevelId b) {
            return column_of(bset.ground_ids, a) < column_of(bset.ground_ids, b);
        });
        choices.push_back(std::move(kept));
        if (strategy == KeepStrategy::First) break;
    }
    return choices;
}

template <Scalar T>
DarkStateResult<T> cross_product_dark(const BVectorSet<T>& bset, const std::vector<LevelId>& kept_columns) {
    const std::size_t nb = bset.independent_count();
    const std::size_t ng = bset.num_ground();
    if (nb >= ng)
        throw ConstructionError(ConstructionErrorKind::NoDarkState,
                                "NoDarkState: " + std::to_string(nb) + " independent b-vectors span the ground manifold");
    if (kept_columns.size() != nb + 1)
        throw std::invalid_argument("cross_product_dark: need exactly N_b + 1 kept columns");

    std::vector<std::size_t> cols;
    for (LevelId id : kept_columns) cols.push_back(column_of(bset.ground_ids, id));
    std::vector<std::size_t> all_rows(nb);
    for (std::size_t i = 0; i < nb; ++i) all_rows[i] = i;

    const Matrix<T> block = bset.overlaps.submatrix(all_rows, cols);
    if (block_rank(block) < nb) {
        std::ostringstream msg;
        msg << "RankDrop: b-vectors restricted to the kept columns are dependent";
        throw ConstructionError(ConstructionErrorKind::RankDrop, msg.str());
    }

    std::vector<T> raw(ng, T{});
    for (std::size_t k = 0; k <= nb; ++k) {
        std::vector<std::size_t> minor_cols;
        for (std::size_t j = 0; j <= nb; ++j)
            if (j != k) minor_cols.push_back(j);
        const T minor = nb == 0 ? T{1} : determinant(block.submatrix(all_rows, minor_cols));
        raw[cols[k]] = k % 2 == 0 ? minor : T(-minor);
    }
    return finish<T>(bset.ground_ids, std::move(raw), DarkMethod::CrossProduct, kept_columns);
}

template <Scalar T>
DarkStateResult<T> projected_cross_product(const BVectorSet<T>& bset, const std::vector<LevelId>& delete_set) {
    const std::size_t nb = bset.independent_count();
    const std::size_t ng = bset.num_ground();
    if (nb >= ng)
        throw ConstructionError(ConstructionErrorKind::NoDarkState,
                                "NoDarkState: " + std::to_string(nb) + " independent b-vectors span the ground manifold");
    if (delete_set.size() + nb + 1 != ng)
        throw std::invalid_argument("projected_cross_product: need exactly N_g - N_b - 1 deleted columns");

    std::vector<bool> deleted(ng, false);
    for (LevelId id : delete_set) deleted[column_of(bset.ground_ids, id)] = true;

    // P_b removes the deleted ground kets from every b-vector.
    Matrix<T> projected = bset.overlaps;
    for (std::size_t i = 0; i < projected.rows(); ++i)
        for (std::size_t j = 0; j < ng; ++j)
            if (deleted[j]) projected(i, j) = T{};
    if (block_rank(projected) < nb)
        throw ConstructionError(ConstructionErrorKind::IndependenceLost,
                                "IndependenceLost: projected b-vectors are linearly dependent");

    std::vector<LevelId> kept;
    for (std::size_t j = 0; j < ng; ++j)
        if (!deleted[j]) kept.push_back(bset.ground_ids[j]);

    BVectorSet<T> reduced{bset.ground_ids, projected};
    DarkStateResult<T> r = cross_product_dark(reduced, kept);
    r.method = DarkMethod::ProjectedCrossProduct;
    return r;
}

template <Scalar T>
GroundVector<T> canonicalize(GroundVector<T> v) {
    if constexpr (is_exact_v<T>) {
        // Dividing by the leading amplitude removes the complex phase, content_reduce the scale.
        const auto lead = std::find_if(v.amplitudes.begin(), v.amplitudes.end(), [](const T& x) { return !x.is_zero(); });
        if (lead != v.amplitudes.end()) {
            const T inv = T(1) / *lead;
            for (auto& x : v.amplitudes) x *= inv;
        }
        v.amplitudes = content_reduce(std::move(v.amplitudes));
    } else {
        const double n = std::sqrt(norm_squared(v.amplitudes));
        if (n > 0.0) {
            double biggest = 0.0;
            for (const auto& x : v.amplitudes) biggest = std::max(biggest, std::abs(x));
            FloatScalar phase{1.0};
            for (const auto& x : v.amplitudes)
                if (std::abs(x) > 1e-12 * biggest) {
                    phase = std::conj(x) / std::abs(x);
                    break;
                }
            for (auto& x : v.amplitudes) x *= phase / n;
            for (auto& x : v.amplitudes)
                if (std::abs(x) <= 1e-12 * biggest / n) x = 0.0;
        }
    }
    v.norm_squared = norm_squared(v.amplitudes);
    return v;
}

template <Scalar T>
std::vector<GroundVector<T>> null_space(const BlockHamiltonian<T>& blocks) {
    std::vector<GroundVector<T>> out;
    const auto ids = blocks.ground_ids();
    if constexpr (is_exact_v<T>) {
        for (auto& v : exact_null_space(blocks.B)) out.push_back(canonicalize(GroundVector<T>{ids, std::move(v), {}}));
    } else {
        const RightSvd svd = right_svd(blocks.B);
        const std::size_t r = numerical_rank(svd);
        for (std::size_t k = r; k < svd.right.cols(); ++k) {
            GroundVector<T> g{ids, {}, {}};
            for (std::size_t i = 0; i < svd.right.rows(); ++i) g.amplitudes.push_back(svd.right(i, k));
            out.push_back(canonicalize(std::move(g)));
        }
    }
    return out;
}

template <Scalar T>
std::vector<T> embed(const GroundVector<T>& ground, const Classification& classification) {
    const std::size_t excited = classification.num_excited();
    std::vector<T> full(excited + classification.num_ground(), T{});
    for (std::size_t j = 0; j < ground.ids.size(); ++j)
        full[excited + column_of(classification.ground_ids, ground.ids[j])] = ground.amplitudes[j];
    return full;
}

template <Scalar T>
std::vector<T> embed(const GroundVector<T>& ground, const BlockHamiltonian<T>& blocks) {
    const std::size_t excited = blocks.num_excited();
    const auto ground_ids = blocks.ground_ids();
    std::vector<T> full(blocks.size(), T{});
    for (std::size_t j = 0; j < ground.ids.size(); ++j)
        full[excited + column_of(ground_ids, ground.ids[j])] = ground.amplitudes[j];
    return full;
}

template <Scalar T>
std::vector<DarkStateResult<T>> construct_dark_states(const BlockHamiltonian<T>& blocks, KeepStrategy strategy) {
    const BVectorSet<T> bset = b_vectors(blocks);
    std::vector<DarkStateResult<T>> out;
    if (bset.independent_count() >= bset.num_ground()) return out;

    try {
        for (const auto& kept : select_kept_columns(bset, strategy)) {
            if (kept.size() == bset.num_ground()) {
                out.push_back(cross_product_dark(bset, kept));
            } else {
                std::vector<LevelId> deleted;
                for (LevelId id : bset.ground_ids)
                    if (std::find(kept.begin(), kept.end(), id) == kept.end()) deleted.push_back(id);
                out.push_back(projected_cross_product(bset, deleted));
            }
        }
    } catch (const ConstructionError&) {
        out.clear();
        for (auto& g : null_space(blocks)) {
            DarkStateResult<T> r;
            r.raw = g;
            r.ground_part = std::move(g);
            r.method = DarkMethod::NullSpace;
            r.kept_columns = bset.ground_ids;
            out.push_back(std::move(r));
            if (strategy == KeepStrategy::First) break;
        }
    }
    for (auto& r : out) r.full_vector = embed(r.ground_part, blocks);
    return out;
}

#define DARKSTATE_INSTANTIATE(T)                                                                                  \
    template struct BVectorSet<T>;                                                                                \
    template BVectorSet<T> b_vectors(const BlockHamiltonian<T>&);                                                 \
    template BVectorSet<T> b_vectors_from_overlaps(std::vector<LevelId>, const Matrix<T>&);                       \
    template std::vector<LevelId> pivot_columns(const BVectorSet<T>&);                                            \
    template std::vector<std::vector<LevelId>> select_kept_columns(const BVectorSet<T>&, KeepStrategy);           \
    template DarkStateResult<T> cross_product_dark(const BVectorSet<T>&, const std::vector<LevelId>&);            \
    template DarkStateResult<T> projected_cross_product(const BVectorSet<T>&, const std::vector<LevelId>&);       \
    template GroundVector<T> canonicalize(GroundVector<T>);                                                       \
    template std::vector<GroundVector<T>> null_space(const BlockHamiltonian<T>&);                                 \
    template std::vector<T> embed(const GroundVector<T>&, const Classification&);                                 \
    template std::vector<T> embed(const GroundVector<T>&, const BlockHamiltonian<T>&);                            \
    template std::vector<DarkStateResult<T>> construct_dark_states(const BlockHamiltonian<T>&, KeepStrategy);

DARKSTATE_INSTANTIATE(ExactScalar)
DARKSTATE_INSTANTIATE(FloatScalar)

#undef DARKSTATE_INSTANTIATE

}  // namespace darkstate
