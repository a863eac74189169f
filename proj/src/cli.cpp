#include "darkstate/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "darkstate/analysis.hpp"
#include "darkstate/linalg.hpp"
#include "darkstate/network_io.hpp"
#include "darkstate/oracle.hpp"

namespace darkstate {

namespace {

struct Source {
    LevelNetwork network;
    std::string label;
};

Source load(const RunConfig& config) {
    std::string name = config.input;
    if (config.subcommand == Subcommand::Demo && name.rfind("demo:", 0) != 0) name = "demo:" + name;
    if (name.rfind("demo:", 0) == 0) {
        const std::string demo = name.substr(5);
        return {demo_network(demo), name};
    }
    return {parse_network_file(name), name};
}

template <Scalar T>
struct Pipeline {
    Classification classification;
    RotatingFrame<RealOf<T>> frame;
    BlockHamiltonian<T> blocks;
    ExistenceVerdict verdict;
};

template <Scalar T>
Pipeline<T> prepare(const LevelNetwork& network) {
    require_valid(network);
    Pipeline<T> p;
    p.classification = classify(network);
    p.frame = solve_frame<RealOf<T>>(network, p.classification);
    p.blocks = assemble<T>(network, p.classification, p.frame);
    p.verdict = analyze(p.blocks);
    return p;
}

std::string render(const Rational& r) { return r.str(); }
std::string render(double x) { return to_string(x); }
std::string render(const ExactScalar& z) { return to_string(z); }
std::string render(const FloatScalar& z) { return to_string(z); }

std::string join_ids(const std::vector<LevelId>& ids) {
    std::ostringstream s;
    for (std::size_t i = 0; i < ids.size(); ++i) s << (i ? " " : "") << ids[i];
    return s.str();
}

std::string summary_line(const ExistenceVerdict& v) {
    std::ostringstream s;
    if (v.exists)
        s << "dark states: " << v.dark_dimension << " (rank B = " << v.rank_B << ", N_g = " << v.num_ground << ")";
    else
        s << "no dark state (rank B = " << v.rank_B << " = N_g)";
    return s.str();
}

template <Scalar T>
void print_matrix(std::ostream& out, const Matrix<T>& m) {
    std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
    std::size_t width = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            cells[i][j] = render(m(i, j));
            width = std::max(width, cells[i][j].size());
        }
    for (const auto& row : cells) {
        out << "  [";
        for (const auto& c : row) out << ' ' << std::setw(static_cast<int>(width)) << c;
        out << " ]\n";
    }
}

template <Scalar T>
void print_blocks(std::ostream& out, const BlockHamiltonian<T>& b) {
    out << "basis (disconnected | connected | ground): "
        << join_ids({b.basis.begin(), b.basis.begin() + static_cast<std::ptrdiff_t>(b.num_disconnected)}) << " | "
        << join_ids({b.basis.begin() + static_cast<std::ptrdiff_t>(b.num_disconnected),
                     b.basis.begin() + static_cast<std::ptrdiff_t>(b.num_excited())})
        << " | " << join_ids(b.ground_ids()) << '\n';
    out << "A (" << b.A.rows() << "x" << b.A.cols() << "):\n";
    print_matrix(out, b.A);
    out << "B (" << b.B.rows() << "x" << b.B.cols() << "):\n";
    print_matrix(out, b.B);
}

template <Scalar T>
void print_frame(std::ostream& out, const LevelNetwork& network, const Pipeline<T>& p) {
    out << "rotating frame (E0 = " << render(p.frame.ground_energy) << ")\n";
    out << "  level  role     energy  epsilon  detuning\n";
    for (const auto& l : network.levels) {
        out << "  " << std::left << std::setw(6) << l.id << ' ' << std::setw(8)
            << (l.role == Role::Ground ? "ground" : "excited") << ' ' << std::setw(7) << l.energy.str() << ' '
            << std::setw(8) << render(p.frame.epsilon.at(l.id)) << ' ' << render(p.frame.detuning.at(l.id)) << '\n'
            << std::right;
    }
    out << "  max |omega - (eps_from - eps_to)| = " << render(transformed_hamiltonian_check(network, p.frame)) << '\n';
}

void print_verdict(std::ostream& out, const Classification& c, const ExistenceVerdict& v, const std::string& det_a) {
    out << summary_line(v) << '\n';
    out << "  N = " << c.size() << ", N_g = " << c.num_ground() << ", N_e = " << c.num_connected()
        << ", disconnected excited = " << c.disconnected_excited_ids.size() << '\n';
    out << "  exists: " << (v.exists ? "yes" : "no") << '\n';
    out << "  rank B: " << v.rank_B << '\n';
    out << "  dark dimension: " << v.dark_dimension << '\n';
    out << "  criteria fired:";
    if (v.criteria_fired.empty()) out << " none";
    for (auto k : v.criteria_fired) out << ' ' << to_string(k);
    out << '\n';
    out << "  det A: " << det_a;
    if (!v.det_A_nonzero.has_value())
        out << " (undetermined in float regime; verdict needs oracle confirmation)";
    else if (!*v.det_A_nonzero)
        out << " (zero: hypothesis violated, verdict needs oracle confirmation)";
    else
        out << " (nonzero)";
    out << '\n';
}

template <Scalar T>
void print_dark_states(std::ostream& out, const std::vector<DarkStateResult<T>>& states) {
    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto& s = states[k];
        out << "dark state " << (k + 1) << " [" << to_string(s.method) << ", kept columns " << join_ids(s.kept_columns)
            << "]\n";
        for (std::size_t j = 0; j < s.ground_part.ids.size(); ++j)
            out << "  " << s.ground_part.ids[j] << " : " << render(s.ground_part.amplitudes[j]) << '\n';
        out << "  norm^2 = " << render(s.ground_part.norm_squared) << '\n';
    }
}

struct CheckRow {
    std::string name;
    bool pass;
    std::string detail;
};

std::string sci(double x) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << x;
    return s.str();
}

template <Scalar T>
std::vector<CheckRow> cross_check(const LevelNetwork& network, const Pipeline<T>& p,
                                  const std::vector<DarkStateResult<T>>& states, double tol) {
    std::vector<CheckRow> rows;
    const ExistenceVerdict& v = p.verdict;

    const auto residual = transformed_hamiltonian_check(network, p.frame);
    if constexpr (is_exact_v<T>)
        rows.push_back({"frame drive residual is zero", residual.is_zero(), residual.str()});
    else
        rows.push_back({"frame drive residual within tolerance", residual <= kFrameTolerance, sci(residual)});

    const bool gram = std::count(v.criteria_fired.begin(), v.criteria_fired.end(), Criterion::DetBdagBZero) > 0;
    rows.push_back({"det(B^dag B) = 0  <=>  rank B < N_g", gram == (v.rank_B < v.num_ground),
                    std::string("det zero: ") + (gram ? "yes" : "no") + ", rank " + std::to_string(v.rank_B)});
    if (counting_criterion(p.classification))
        rows.push_back({"N_e < N_g implies existence", v.exists, v.exists ? "holds" : "violated"});

    const FloatMatrix h = to_float(full_hamiltonian(p.blocks));
    const OracleReport oracle = detect_dark(h, p.blocks.num_excited());
    rows.push_back({"existence agrees with eigendecomposition", v.exists == !oracle.dark_candidates.empty(),
                    std::string("analysis ") + (v.exists ? "yes" : "no") + ", oracle " +
                        std::to_string(oracle.dark_candidates.size()) + " candidate(s)"});
    rows.push_back({"dark dimension = oracle dark count", v.dark_dimension == oracle.dark_candidates.size(),
                    std::to_string(v.dark_dimension) + " vs " + std::to_string(oracle.dark_candidates.size())});
    rows.push_back({"oracle zero eigenvalues >= dark dimension", oracle.zero_eigenvalue_count >= v.dark_dimension,
                    std::to_string(oracle.zero_eigenvalue_count) + " >= " + std::to_string(v.dark_dimension)});
    rows.push_back({"oracle dark candidates are eigenvectors", oracle.matched, "max residual " + sci(oracle.max_residual)});

    for (std::size_t k = 0; k < states.size(); ++k) {
        const auto& s = states[k];
        std::vector<FloatScalar> d;
        for (const auto& x : s.full_vector) d.push_back(to_float(x));
        const double r = verify_dark(h, d);
        rows.push_back({"dark state " + std::to_string(k + 1) + ": ||H D|| / ||H||_F <= tol", r <= tol,
                        sci(r) + " <= " + sci(tol)});

        const std::vector<T> bd = p.blocks.B.apply(s.ground_part.amplitudes);
        if constexpr (is_exact_v<T>) {
            const bool zero = std::all_of(bd.begin(), bd.end(), [](const T& x) { return x.is_zero(); });
            rows.push_back({"dark state " + std::to_string(k + 1) + ": orthogonal to every b-vector (exact)", zero,
                            zero ? "B D_g = 0" : "B D_g != 0"});
        } else {
            double worst = 0.0;
            for (const auto& x : bd) worst = std::max(worst, std::abs(x));
            const double scale = std::max(1.0, frobenius_norm(p.blocks.B));
            rows.push_back({"dark state " + std::to_string(k + 1) + ": orthogonal to every b-vector",
                            worst <= tol * scale, "max |B D_g| " + sci(worst)});
        }
    }

    if (!states.empty()) {
        Matrix<T> stacked(states.size(), p.blocks.num_ground);
        for (std::size_t k = 0; k < states.size(); ++k)
            for (std::size_t j = 0; j < p.blocks.num_ground; ++j) stacked(k, j) = states[k].ground_part.amplitudes[j];
        std::size_t r = 0;
        if constexpr (is_exact_v<T>)
            r = rank(stacked);
        else
            r = numerical_rank(right_svd(stacked));
        rows.push_back({"constructed states span the dark subspace", r == v.dark_dimension && states.size() == r,
                        "rank " + std::to_string(r) + " of " + std::to_string(v.dark_dimension)});
    }
    return rows;
}

template <Scalar T>
std::string det_a_text(const BlockHamiltonian<T>& blocks) {
    return render(det_A(blocks));
}

template <Scalar T>
int run_regime(const RunConfig& config, const Source& src, std::ostream& out) {
    const Pipeline<T> p = prepare<T>(src.network);
    const bool frame_only = config.subcommand == Subcommand::FrameReport;
    if (config.frame_report || frame_only) print_frame(out, src.network, p);
    if (config.dump_blocks) print_blocks(out, p.blocks);
    if (frame_only) return exit_code::kDarkFound;

    switch (config.subcommand) {
        case Subcommand::Check:
            print_verdict(out, p.classification, p.verdict, det_a_text(p.blocks));
            return p.verdict.exists ? exit_code::kDarkFound : exit_code::kNoDark;
        case Subcommand::Solve: {
            out << summary_line(p.verdict) << '\n';
            const auto states = construct_dark_states(p.blocks, config.strategy);
            if (states.empty()) {
                out << "none\n";
                return exit_code::kNoDark;
            }
            print_dark_states(out, states);
            return exit_code::kDarkFound;
        }
        case Subcommand::Verify:
        case Subcommand::Demo: {
            out << "input: " << src.label << '\n';
            print_verdict(out, p.classification, p.verdict, det_a_text(p.blocks));
            const auto states = construct_dark_states(p.blocks, KeepStrategy::All);
            print_dark_states(out, states);
            const auto rows = cross_check(src.network, p, states, config.tolerance);
            std::size_t width = 0;
            for (const auto& r : rows) width = std::max(width, r.name.size());
            out << "cross-checks:\n";
            bool all = true;
            for (const auto& r : rows) {
                out << "  " << std::left << std::setw(static_cast<int>(width)) << r.name << std::right << "  "
                    << (r.pass ? "pass" : "FAIL") << "  " << r.detail << '\n';
                all = all && r.pass;
            }
            out << (all ? "all checks passed" : "VERIFICATION FAILED") << '\n';
            return all ? exit_code::kDarkFound : exit_code::kVerifyFailed;
        }
        case Subcommand::FrameReport: break;
    }
    return exit_code::kUsage;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (!(config.tolerance > 0.0)) {
        err << "error: tolerance must be positive\n";
        return exit_code::kUsage;
    }
    Source src;
    try {
        src = load(config);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::kBadInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << " (known demos:";
        for (const auto& n : demo_names()) err << ' ' << n;
        err << ")\n";
        return exit_code::kUsage;
    }

    try {
        if (config.regime == Regime::Exact) return run_regime<ExactScalar>(config, src, out);
        return run_regime<FloatScalar>(config, src, out);
    } catch (const InvalidNetwork& e) {
        err << "error: invalid network: " << e.what() << '\n';
    } catch (const FrameError& e) {
        err << "error: no rotating frame: " << e.what() << '\n';
    } catch (const NotHermitian& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_code::kBadInput;
}

}  // namespace darkstate
