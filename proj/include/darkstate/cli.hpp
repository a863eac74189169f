#pragma once

#include <iosfwd>
#include <string>

#include "darkstate/construct.hpp"
#include "darkstate/scalar.hpp"

namespace darkstate {

enum class Subcommand { Check, Solve, Verify, FrameReport, Demo };

struct RunConfig {
    Subcommand subcommand = Subcommand::Check;
    /// File path, or "demo:<name>". For Subcommand::Demo, just the demo name.
    std::string input;
    Regime regime = Regime::Exact;
    KeepStrategy strategy = KeepStrategy::First;
    double tolerance = 1e-10;
    bool dump_blocks = false;
    bool frame_report = false;
};

/// Stable exit codes.
namespace exit_code {
inline constexpr int kDarkFound = 0;  // also: verify passed
inline constexpr int kUsage = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kNoDark = 3;
inline constexpr int kVerifyFailed = 4;
}  // namespace exit_code

/// Runs one subcommand; reports go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace darkstate
