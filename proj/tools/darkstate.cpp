#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "darkstate/cli.hpp"
#include "darkstate/network_io.hpp"

using namespace darkstate;

int main(int argc, char** argv) {
    CLI::App app{"darkstate: dark-state analysis for multi-level networks"};
    app.require_subcommand(1);

    RunConfig config;
    std::string regime = "exact";
    std::string strategy = "first";

    const std::map<std::string, Regime> regimes{{"exact", Regime::Exact}, {"float", Regime::Float}};
    const std::map<std::string, KeepStrategy> strategies{{"first", KeepStrategy::First}, {"all", KeepStrategy::All}};

    auto common = [&](CLI::App* sub, bool with_strategy) {
        sub->add_option("--regime", regime, "exact or float")->check(CLI::IsMember({"exact", "float"}));
        sub->add_option("--tol", config.tolerance, "residual tolerance for verification")->check(CLI::PositiveNumber);
        sub->add_flag("--dump-blocks", config.dump_blocks, "print the A and B blocks");
        sub->add_flag("--frame-report", config.frame_report, "print the rotating frame");
        if (with_strategy)
            sub->add_option("--strategy", strategy, "first: one dark state; all: a basis of the dark subspace")
                ->check(CLI::IsMember({"first", "all"}));
    };

    auto* check = app.add_subcommand("check", "decide whether dark states exist");
    check->add_option("network", config.input, "network file or demo:<name>")->required();
    common(check, false);

    auto* solve = app.add_subcommand("solve", "construct dark states");
    solve->add_option("network", config.input, "network file or demo:<name>")->required();
    common(solve, true);

    auto* verify = app.add_subcommand("verify", "cross-check the analysis against an eigendecomposition");
    verify->add_option("network", config.input, "network file or demo:<name>")->required();
    common(verify, false);

    auto* frame = app.add_subcommand("frame-report", "solve the rotating frame and print it");
    frame->add_option("network", config.input, "network file or demo:<name>")->required();
    common(frame, false);

    std::string demo_list;
    for (const auto& n : demo_names()) demo_list += (demo_list.empty() ? "" : ", ") + n;
    auto* demo = app.add_subcommand("demo", "verify a bundled network (" + demo_list + ")");
    demo->add_option("name", config.input, "demo name")->required();
    common(demo, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code::kUsage;
    }

    if (check->parsed()) config.subcommand = Subcommand::Check;
    if (solve->parsed()) config.subcommand = Subcommand::Solve;
    if (verify->parsed()) config.subcommand = Subcommand::Verify;
    if (frame->parsed()) config.subcommand = Subcommand::FrameReport;
    if (demo->parsed()) config.subcommand = Subcommand::Demo;
    config.regime = regimes.at(regime);
    config.strategy = strategies.at(strategy);

    return run(config, std::cout, std::cerr);
}
