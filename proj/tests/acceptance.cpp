// Acceptance suite: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"

using namespace darkstate;
using namespace testing_support;

namespace {

struct Result {
    bool pass = true;
    std::ostringstream detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) detail << "    first failure: " << what << '\n';
            pass = false;
        }
    }
};

std::vector<ExactScalar> reduce(std::vector<ExactScalar> v) { return content_reduce(std::move(v)); }

Rational nonzero_real(Rng& rng) { return random_nonzero(rng, 12, 7); }

// Lambda system: level 1 excited, 2 and 3 ground.
LevelNetwork lambda_network(const Rational& o1, const Rational& o2, const Rational& d1) {
    const std::vector<Level> levels{{1, Rational(40), Role::Excited}, {2, Rational(0), Role::Ground},
                                    {3, Rational(1, 3), Role::Ground}};
    return network_from_detunings(levels, {{1, d1}}, {{1, 2, o1}, {1, 3, o2}});
}

Result criterion_lambda(Rng& rng) {
    Result r;
    for (int trial = 0; trial < 100; ++trial) {
        const Rational o1 = nonzero_real(rng), o2 = nonzero_real(rng), d1 = nonzero_real(rng);
        const auto b = exact_blocks(lambda_network(o1, o2, d1));
        const auto states = construct_dark_states(b, KeepStrategy::First);
        r.expect(states.size() == 1, "expected exactly one dark state");
        if (states.size() != 1) continue;
        const auto expected = reduce({ExactScalar(o2), ExactScalar(-o1)});
        r.expect(states[0].ground_part.amplitudes == expected,
                 "O1=" + o1.str() + " O2=" + o2.str() + " D1=" + d1.str());
    }
    r.detail << "    100 draws of (O1, O2, D1)\n";
    return r;
}

struct PyramidParams {
    Rational d1, d2;
    Rational o[7];  // o[1..6]
};

LevelNetwork pyramid_network(const PyramidParams& p) {
    const std::vector<Level> levels{{1, Rational(20), Role::Excited}, {2, Rational(12), Role::Excited},
                                    {3, Rational(11), Role::Excited}, {4, Rational(0), Role::Ground},
                                    {5, Rational(1, 4), Role::Ground}, {6, Rational(1, 2), Role::Ground}};
    return network_from_detunings(levels, {{1, p.d2}, {2, p.d1}, {3, p.d1}},
                                  {{1, 2, p.o[1]}, {1, 3, p.o[2]}, {2, 4, p.o[3]},
                                   {2, 5, p.o[4]}, {3, 5, p.o[5]}, {3, 6, p.o[6]}});
}

Result criterion_pyramid(Rng& rng) {
    Result r;
    int fixtures = 0;
    for (int f = 0; f < 10; ++f, ++fixtures) {
        PyramidParams p;
        for (int k = 1; k <= 6; ++k) p.o[k] = nonzero_real(rng);
        p.d1 = nonzero_real(rng);
        p.d2 = nonzero_real(rng);
        const auto base = construct_dark_states(exact_blocks(pyramid_network(p)), KeepStrategy::First);
        r.expect(base.size() == 1, "expected one dark state");
        if (base.size() != 1) continue;
        const auto expected =
            reduce({ExactScalar(p.o[4] * p.o[6]), ExactScalar(-(p.o[3] * p.o[6])), ExactScalar(p.o[3] * p.o[5])});
        r.expect(base[0].ground_part.amplitudes == expected, "dark state differs from O4 O6, -O3 O6, O3 O5");

        for (int redraw = 0; redraw < 100; ++redraw) {
            PyramidParams q = p;
            q.d1 = nonzero_real(rng);
            q.d2 = nonzero_real(rng);
            q.o[1] = nonzero_real(rng);
            q.o[2] = nonzero_real(rng);
            const auto again = construct_dark_states(exact_blocks(pyramid_network(q)), KeepStrategy::First);
            r.expect(again.size() == 1 && again[0].raw.amplitudes == base[0].raw.amplitudes &&
                         again[0].ground_part.amplitudes == base[0].ground_part.amplitudes,
                     "dark state changed when only D1, D2, O1, O2 were redrawn");
        }
    }
    r.detail << "    " << fixtures << " fixtures x 100 redraws of (D1, D2, O1, O2)\n";
    return r;
}

const std::pair<LevelId, LevelId> kTwelveEdges[17] = {
    {0, 0}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 8}, {3, 9},
    {4, 9}, {4, 10}, {5, 9}, {5, 11}, {6, 10}, {6, 12}, {7, 11}, {7, 12}};

LevelNetwork twelve_network(const std::vector<Rational>& o, const Rational& d1, const Rational& d2) {
    std::vector<Level> levels;
    std::map<LevelId, Rational> detunings;
    for (LevelId id = 1; id <= 12; ++id) {
        const Role role = id <= 7 ? Role::Excited : Role::Ground;
        levels.push_back({id, role == Role::Excited ? Rational(50 + id) : Rational(id, 13), role});
        if (id <= 2) detunings[id] = d2;
        else if (id <= 7) detunings[id] = d1;
    }
    std::vector<Coupling> couplings;
    for (int k = 1; k <= 16; ++k) couplings.push_back({kTwelveEdges[k].first, kTwelveEdges[k].second, o[k]});
    return network_from_detunings(levels, detunings, couplings);
}

Result criterion_twelve(Rng& rng) {
    Result r;
    int generic = 0, constrained = 0;
    while (generic < 50) {
        std::vector<Rational> o(17);
        for (int k = 1; k <= 16; ++k) o[k] = nonzero_real(rng);
        const Rational chi = o[9] * o[12] * o[13] * o[16] - o[10] * o[11] * o[14] * o[15];
        if (chi.is_zero()) continue;
        ++generic;
        const auto b = exact_blocks(twelve_network(o, nonzero_real(rng), nonzero_real(rng)));
        const auto v = analyze(b);
        r.expect(v.rank_B == 5 && !v.exists, "generic draw: rank " + std::to_string(v.rank_B));
        r.expect(construct_dark_states(b, KeepStrategy::All).empty(), "generic draw produced a dark state");
    }
    while (constrained < 50) {
        std::vector<Rational> o(17);
        for (int k = 1; k <= 16; ++k) o[k] = nonzero_real(rng);
        o[12] = o[10] * o[11] * o[14] * o[15] / (o[9] * o[13] * o[16]);
        ++constrained;
        const auto b = exact_blocks(twelve_network(o, nonzero_real(rng), nonzero_real(rng)));
        const auto v = analyze(b);
        r.expect(v.rank_B == 4 && v.dark_dimension == 1, "constrained draw: rank " + std::to_string(v.rank_B));
        const auto states = construct_dark_states(b, KeepStrategy::First);
        r.expect(states.size() == 1, "constrained draw: expected one dark state");
        if (states.size() != 1) continue;
        const std::vector<ExactScalar> eq{ExactScalar(-(o[8] * o[10] * o[14] * o[15])),
                                          ExactScalar(o[7] * o[10] * o[14] * o[15]),
                                          ExactScalar(-(o[7] * o[9] * o[14] * o[15])),
                                          ExactScalar(-(o[7] * o[9] * o[13] * o[16])),
                                          ExactScalar(o[7] * o[9] * o[13] * o[15])};
        r.expect(proportional(states[0].ground_part.amplitudes, eq) &&
                     states[0].ground_part.amplitudes == reduce(eq),
                 "constrained draw: dark state is not the closed-form expression");
    }
    r.detail << "    " << generic << " generic draws (rank 5), " << constrained << " constrained draws (rank 4)\n";
    return r;
}

Result criterion_block_determinant(Rng& rng) {
    Result r;
    // 2-level instance: A = [1], B = [3].
    {
        ExactMatrix a(1, 1), b(1, 1);
        a(0, 0) = 1;
        b(0, 0) = 3;
        const auto id = determinant_identity(blocks_from_matrices(a, b));
        r.detail << "    2-level instance: det H = " << to_string(id.det_H)
                 << ", det(A) det(-B^dag A^-1 B) = " << to_string(id.schur_form)
                 << ", (-1)^N det(B^dag B) = " << to_string(id.gram_form_parity_n)
                 << ", (-1)^N_g det(B^dag B) = " << to_string(id.gram_form) << '\n';
        r.expect(id.schur_equal() && id.det_H == id.gram_form_parity_n, "2-level sign instance");
    }

    int draws = 0, schur_ok = 0, parity_n_ok = 0, parity_ng_ok = 0;
    std::map<std::string, std::pair<int, int>> by_shape;  // shape -> (draws, (-1)^N form holds)
    std::uniform_int_distribution<std::size_t> total(2, 8);
    while (draws < 200) {
        const std::size_t n = total(rng);
        std::uniform_int_distribution<std::size_t> ground(1, n - 1);
        const std::size_t ng = ground(rng);
        const std::size_t ne = n - ng;
        const auto a = random_hermitian(rng, ne);
        if (determinant(a).is_zero()) continue;
        const auto b = random_matrix(rng, ne, ng, 0.25);
        const auto id = determinant_identity(blocks_from_matrices(a, b));
        ++draws;
        const bool parity_n = id.det_H == id.gram_form_parity_n;
        schur_ok += id.schur_equal();
        parity_n_ok += parity_n;
        parity_ng_ok += id.gram_equal();
        const std::string shape = ne < ng ? "wide B" : (ne == ng ? "square B" : "tall B");
        by_shape[shape].first += 1;
        by_shape[shape].second += parity_n;
        r.expect(id.schur_equal(), "det H != det(A) det(-B^dag A^-1 B)");
        r.expect(parity_n, "det H != (-1)^N det(B^dag B) for N = " + std::to_string(n) + ", N_g = " +
                               std::to_string(ng));
    }
    r.detail << "    " << draws << " draws, N <= 8, det A != 0\n";
    r.detail << "    det H = det(A) det(-B^dag A^-1 B): " << schur_ok << "/" << draws << '\n';
    r.detail << "    det H = (-1)^N det(B^dag B):       " << parity_n_ok << "/" << draws << '\n';
    for (const auto& [shape, counts] : by_shape)
        r.detail << "      " << shape << ": " << counts.second << "/" << counts.first << '\n';
    r.detail << "    det H = (-1)^N_g det(B^dag B):     " << parity_ng_ok << "/" << draws << '\n';
    return r;
}

struct Pool {
    std::vector<RandomNetwork> all;        // every generated network
    std::vector<RandomNetwork> accepted;   // det A != 0 and singular-value margin
};

Pool make_pool(Rng& rng, std::size_t wanted) {
    Pool pool;
    while (pool.accepted.size() < wanted) {
        auto rn = random_network(rng, 10);
        pool.all.push_back(rn);
        const auto b = exact_blocks(rn.network);
        if (det_A(b).is_zero()) continue;
        if (singular_margin(b) < 1e-6) continue;
        pool.accepted.push_back(std::move(rn));
    }
    return pool;
}

Result criterion_oracle(const Pool& pool) {
    Result r;
    int with_dark = 0, states_checked = 0;
    double worst = 0.0;
    std::map<std::size_t, int> dims;
    for (const auto& rn : pool.accepted) {
        const auto b = exact_blocks(rn.network);
        const auto v = analyze(b);
        const auto h = to_float(full_hamiltonian(b));
        const auto report = detect_dark(h, b.num_excited());
        const bool det_zero = det_BdagB(b).is_zero();
        r.expect(det_zero == !report.dark_candidates.empty(), "det(B^dag B) = 0 disagrees with the oracle");
        r.expect(v.exists == !report.dark_candidates.empty(), "existence disagrees with the oracle");
        r.expect(v.dark_dimension == report.dark_candidates.size(),
                 "dark dimension " + std::to_string(v.dark_dimension) + " vs oracle " +
                     std::to_string(report.dark_candidates.size()));
        r.expect(report.zero_eigenvalue_count >= v.dark_dimension, "fewer zero eigenvalues than dark states");
        dims[v.dark_dimension] += 1;
        with_dark += v.exists;
        for (const auto& s : construct_dark_states(b, KeepStrategy::All)) {
            const double res = verify_dark(h, to_float_vector(s.full_vector));
            worst = std::max(worst, res);
            ++states_checked;
            r.expect(res <= 1e-10, "constructed state residual above 1e-10");
        }
    }
    r.detail << "    " << pool.accepted.size() << " networks (" << pool.all.size() << " generated), " << with_dark
             << " with dark states; dimension histogram:";
    for (const auto& [d, c] : dims) r.detail << ' ' << d << ':' << c;
    r.detail << "\n    " << states_checked << " constructed states, max ||HD||/||H||_F = " << worst << '\n';
    return r;
}

Result criterion_counting(const Pool& pool) {
    Result r;
    int applicable = 0;
    for (const auto& rn : pool.all) {
        const auto c = classify(rn.network);
        if (!counting_criterion(c)) continue;
        ++applicable;
        r.expect(analyze(exact_blocks(rn.network)).exists, "N_e < N_g without a dark state");
    }
    r.expect(applicable > 0, "no network with N_e < N_g was generated");
    r.detail << "    " << applicable << " of " << pool.all.size() << " generated networks have N_e < N_g\n";
    return r;
}

Result criterion_recombination(Rng& rng, const Pool& pool) {
    Result r;
    std::vector<std::pair<std::string, ExactBlocks>> fixtures{
        {"lambda", exact_blocks(demo_network("lambda"))},
        {"pyramid", exact_blocks(demo_network("pyramid"))},
        {"twelve-level-constrained", exact_blocks(demo_network("twelve-level-constrained"))}};
    for (const auto& rn : pool.accepted) {
        if (fixtures.size() >= 13) break;
        auto b = exact_blocks(rn.network);
        const auto bset = b_vectors(b);
        if (bset.independent_count() >= 1 && bset.independent_count() < bset.num_ground())
            fixtures.emplace_back("random", std::move(b));
    }
    int recombinations = 0;
    for (const auto& [name, b] : fixtures) {
        const auto bset = b_vectors(b);
        const std::size_t nb = bset.independent_count();
        const auto kept = select_kept_columns(bset, KeepStrategy::First).front();
        const auto reference = cross_product_dark(bset, kept);
        for (int k = 0; k < 50; ++k) {
            ExactMatrix mix;
            do mix = random_matrix(rng, nb, nb, 0.2);
            while (determinant(mix).is_zero());
            const BVectorSet<ExactScalar> mixed{bset.ground_ids, mix * bset.overlaps};
            const auto d = cross_product_dark(mixed, kept);
            ++recombinations;
            r.expect(d.ground_part.amplitudes == reference.ground_part.amplitudes &&
                         proportional(d.raw.amplitudes, reference.raw.amplitudes),
                     name + ": recombined b-vectors changed the dark state");
        }
    }
    r.detail << "    " << fixtures.size() << " fixtures, " << recombinations << " recombinations\n";
    return r;
}

// Removing edge k leaves its endpoints connected iff it lies on a cycle.
bool on_cycle(const LevelNetwork& n, std::size_t k) {
    const LevelId target = n.transitions[k].to;
    std::set<LevelId> seen{n.transitions[k].from};
    std::vector<LevelId> stack{n.transitions[k].from};
    while (!stack.empty()) {
        const LevelId x = stack.back();
        stack.pop_back();
        for (std::size_t e = 0; e < n.transitions.size(); ++e) {
            if (e == k) continue;
            const auto& t = n.transitions[e];
            const LevelId y = t.from == x ? t.to : (t.to == x ? t.from : 0);
            if (y != 0 && seen.insert(y).second) stack.push_back(y);
        }
    }
    return seen.contains(target);
}

Result criterion_frame(Rng& rng) {
    Result r;
    int networks = 0, perturbations = 0;
    while (networks < 200) {
        const auto rn = random_network(rng, 10, 0.0);
        LevelNetwork n = rn.network;
        if (!every_level_reaches_ground(n)) continue;
        // Hidden frame: random eps on excited levels, eps_g = E_g on ground levels.
        std::map<LevelId, Rational> eps, expected;
        for (auto& l : n.levels) {
            l.energy = random_rational(rng, 60, 4);
            if (l.role == Role::Ground) {
                eps[l.id] = l.energy;
                expected[l.id] = Rational(0);
            } else {
                eps[l.id] = l.energy - random_rational(rng, 9, 5);
                expected[l.id] = l.energy - eps[l.id];
            }
        }
        for (auto& t : n.transitions) t.drive_frequency = eps[t.from] - eps[t.to];
        ++networks;

        const auto c = classify(n);
        const auto frame = solve_frame<Rational>(n, c);
        r.expect(frame.detuning == expected, "recovered detunings differ from the hidden frame");
        r.expect(transformed_hamiltonian_check(n, frame).is_zero(), "nonzero frame residual");
        for (LevelId g : c.ground_ids) r.expect(frame.detuning.at(g).is_zero(), "ground detuning not zero");

        for (std::size_t k = 0; k < n.transitions.size(); ++k) {
            if (!on_cycle(n, k)) continue;
            auto bad = n;
            bad.transitions[k].drive_frequency += random_nonzero(rng, 5, 9);
            ++perturbations;
            bool cycle_error = false;
            try {
                (void)solve_frame<Rational>(bad, c);
            } catch (const FrameError& e) {
                cycle_error = e.kind() == FrameErrorKind::CycleInconsistent;
            }
            r.expect(cycle_error, "perturbed cycle edge did not raise CycleInconsistent");
        }
    }
    r.expect(perturbations > 0, "no cycle edges generated");
    r.detail << "    " << networks << " hidden frames recovered, " << perturbations
             << " single-edge cycle perturbations\n";
    return r;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(20240601);
    const Pool pool = make_pool(rng, 500);

    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"1 lambda dark state equals O2|2> - O1|3> (100 draws)", [&] { return criterion_lambda(rng); }},
        {"2 pyramid dark state closed form, invariant under D1, D2, O1, O2", [&] { return criterion_pyramid(rng); }},
        {"3 twelve-level rank 5 generic, rank 4 and closed-form state when constrained",
         [&] { return criterion_twelve(rng); }},
        {"4 det H = det(A) det(-B^dag A^-1 B) = (-1)^N det(B^dag B) (200 draws)",
         [&] { return criterion_block_determinant(rng); }},
        {"5 existence and dimension agree with the eigendecomposition oracle (500 networks)",
         [&] { return criterion_oracle(pool); }},
        {"6 N_e < N_g always has a dark state", [&] { return criterion_counting(pool); }},
        {"7 cross product invariant under b-vector recombination (50 per fixture)",
         [&] { return criterion_recombination(rng, pool); }},
        {"8 rotating frame recovers hidden detunings, cycle perturbations rejected",
         [&] { return criterion_frame(rng); }},
    };

    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        const Result res = fn();
        std::cout << (res.pass ? "PASS" : "FAIL") << "  criterion " << name << '\n' << res.detail.str();
        failed += !res.pass;
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed in " << secs << " s\n";
    return failed == 0 ? 0 : 1;
}
