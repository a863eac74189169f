#pragma once

// Shared fixtures and independent reference computations for the test binaries.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "darkstate/analysis.hpp"
#include "darkstate/blocks.hpp"
#include "darkstate/construct.hpp"
#include "darkstate/dense_eigen.hpp"
#include "darkstate/linalg.hpp"
#include "darkstate/network.hpp"
#include "darkstate/network_io.hpp"
#include "darkstate/oracle.hpp"
#include "darkstate/rotating_frame.hpp"

namespace testing_support {

using namespace darkstate;

using Rng = std::mt19937_64;

/// Nonzero rational p/q with |p| <= max_num, 1 <= q <= max_den.
inline Rational random_nonzero(Rng& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::bernoulli_distribution neg(0.5);
    const int p = num(rng);
    return Rational(neg(rng) ? -p : p, den(rng));
}

inline Rational random_rational(Rng& rng, int max_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_num, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline ExactScalar random_complex(Rng& rng, double p_complex = 0.5) {
    std::bernoulli_distribution cplx(p_complex);
    if (!cplx(rng)) return random_nonzero(rng);
    ExactScalar z;
    do z = ExactScalar(random_rational(rng), random_rational(rng));
    while (z.is_zero());
    return z;
}

/// Cofactor expansion along the first row. Exponential, fine for n <= 8.
inline ExactScalar cofactor_det(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return ExactScalar(1);
    if (n == 1) return m(0, 0);
    ExactScalar det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        const ExactScalar term = m(0, j) * cofactor_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Rank as the largest k with a nonzero k x k minor (brute force over subsets).
inline std::size_t brute_force_rank(const ExactMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::vector<std::size_t> ri, ci;
                for (std::size_t i = 0; i < rows; ++i)
                    if (rsel[i]) ri.push_back(i);
                for (std::size_t j = 0; j < cols; ++j)
                    if (csel[j]) ci.push_back(j);
                if (!cofactor_det(m.submatrix(ri, ci)).is_zero()) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

inline ExactMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, double p_zero = 0.0) {
    std::bernoulli_distribution zero(p_zero);
    ExactMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!zero(rng)) m(i, j) = random_complex(rng);
    return m;
}

inline ExactMatrix random_hermitian(Rng& rng, std::size_t n, double p_zero = 0.3) {
    std::bernoulli_distribution zero(p_zero);
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = random_nonzero(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (zero(rng)) continue;
            m(i, j) = random_complex(rng);
            m(j, i) = conj(m(i, j));
        }
    }
    return m;
}

/// True iff B v = 0 exactly.
inline bool annihilates(const ExactMatrix& b, const std::vector<ExactScalar>& v) {
    const auto r = b.apply(v);
    return std::all_of(r.begin(), r.end(), [](const ExactScalar& x) { return x.is_zero(); });
}

/// Levels 1..n_excited are excited (bare energy 100 + id), the rest ground with small
/// distinct energies; `delta` gives each excited level's detuning.
inline std::vector<Level> make_levels(std::size_t n_excited, std::size_t n_ground) {
    std::vector<Level> levels;
    for (std::size_t i = 1; i <= n_excited; ++i)
        levels.push_back({static_cast<LevelId>(i), Rational(100 + static_cast<long>(i)), Role::Excited});
    for (std::size_t j = 1; j <= n_ground; ++j)
        levels.push_back({static_cast<LevelId>(n_excited + j), Rational(static_cast<long>(j) - 1, 7), Role::Ground});
    return levels;
}

struct RandomNetwork {
    LevelNetwork network;
    std::size_t n_excited = 0;
    std::size_t n_ground = 0;
};

/// Random network with N <= max_n levels. Excited-excited edges are sparse and random; every
/// ground level gets at least one excited partner. With probability `p_dependent` one
/// connected excited row of B is made a multiple of another so rank drops below min(N_e, N_g).
/// Excited levels that end up without a ground partner are disconnected.
inline RandomNetwork random_network(Rng& rng, std::size_t max_n = 10, double p_dependent = 0.35) {
    std::uniform_int_distribution<std::size_t> total(2, max_n);
    const std::size_t n = total(rng);
    std::uniform_int_distribution<std::size_t> ground_count(1, n - 1);
    const std::size_t ng = ground_count(rng);
    const std::size_t ne = n - ng;

    RandomNetwork out;
    out.n_excited = ne;
    out.n_ground = ng;
    const auto levels = make_levels(ne, ng);

    std::map<LevelId, Rational> detunings;
    for (std::size_t i = 1; i <= ne; ++i) detunings[static_cast<LevelId>(i)] = random_nonzero(rng);

    std::map<std::pair<LevelId, LevelId>, ExactScalar> edges;
    std::bernoulli_distribution ee(0.35);
    std::bernoulli_distribution eg(0.45);
    std::uniform_int_distribution<LevelId> pick_excited(1, static_cast<LevelId>(ne));
    for (LevelId a = 1; a <= static_cast<LevelId>(ne); ++a)
        for (LevelId b = a + 1; b <= static_cast<LevelId>(ne); ++b)
            if (ee(rng)) edges[{a, b}] = random_complex(rng);
    for (LevelId g = static_cast<LevelId>(ne) + 1; g <= static_cast<LevelId>(n); ++g) {
        bool any = false;
        for (LevelId e = 1; e <= static_cast<LevelId>(ne); ++e)
            if (eg(rng)) {
                edges[{e, g}] = random_complex(rng);
                any = true;
            }
        if (!any) edges[{pick_excited(rng), g}] = random_complex(rng);
    }

    std::bernoulli_distribution dependent(p_dependent);
    if (ne >= 2 && dependent(rng)) {
        const LevelId src = pick_excited(rng);
        LevelId dst = pick_excited(rng);
        while (dst == src) dst = pick_excited(rng);
        const ExactScalar scale = random_complex(rng);
        for (LevelId g = static_cast<LevelId>(ne) + 1; g <= static_cast<LevelId>(n); ++g) {
            edges.erase({dst, g});
            if (const auto it = edges.find({src, g}); it != edges.end()) edges[{dst, g}] = it->second * scale;
        }
    }

    std::vector<Coupling> couplings;
    for (const auto& [k, v] : edges) couplings.push_back({k.first, k.second, v});
    out.network = network_from_detunings(levels, detunings, couplings);
    return out;
}

// Drive frequencies fix detunings only in components that contain a ground level.
inline bool every_level_reaches_ground(const LevelNetwork& n) {
    std::set<LevelId> seen;
    std::vector<LevelId> stack;
    for (const auto& l : n.levels)
        if (l.role == Role::Ground) {
            seen.insert(l.id);
            stack.push_back(l.id);
        }
    while (!stack.empty()) {
        const LevelId x = stack.back();
        stack.pop_back();
        for (const auto& t : n.transitions) {
            const LevelId y = t.from == x ? t.to : (t.to == x ? t.from : 0);
            if (y != 0 && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen.size() == n.levels.size();
}

inline ExactBlocks exact_blocks(const LevelNetwork& network) {
    const Classification c = classify(network);
    return assemble<ExactScalar>(network, c, solve_frame<Rational>(network, c));
}

/// Smallest singular value of B counted as nonzero by the exact rank, relative to sigma_max.
/// Returns 1 when B has no nonzero singular value.
inline double singular_margin(const ExactBlocks& blocks) {
    const std::size_t r = rank(blocks.B);
    if (r == 0) return 1.0;
    const RightSvd svd = right_svd(to_float(blocks.B));
    return svd.singular_values[r - 1] / svd.singular_values[0];
}

inline std::vector<FloatScalar> to_float_vector(const std::vector<ExactScalar>& v) {
    std::vector<FloatScalar> out;
    for (const auto& x : v) out.push_back(to_float(x));
    return out;
}

}  // namespace testing_support
