#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "darkstate/network.hpp"

namespace darkstate {

enum class ParseErrorKind { SyntaxError, MissingField, BadRole, NonNumeric, IoError };

const char* to_string(ParseErrorKind kind);

/// Syntax errors carry a 1-based line/column; field errors carry the JSON pointer of the
/// offending value and line = column = 0.
class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, std::string location, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line), column_(column), location_(std::move(location)) {}

    [[nodiscard]] ParseErrorKind kind() const { return kind_; }
    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }
    [[nodiscard]] const std::string& location() const { return location_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
    std::string location_;
};

/// Network description document:
///
///   { "levels":      [ {"id": 1, "energy": "10", "role": "excited"}, ... ],
///     "transitions": [ {"from": 1, "to": 2, "omega_re": "0.5", "omega_im": "0",
///                       "drive_frequency": "9"}, ... ] }
///
/// Numeric fields are exact decimal strings ("1.25", "-3e-2") or fractions ("7/3");
/// plain JSON numbers are accepted too. omega_im defaults to 0.
LevelNetwork parse_network(std::string_view text);
LevelNetwork parse_network_file(const std::filesystem::path& path);

/// Inverse of parse_network; exact values are written as "p/q" strings.
std::string format_network(const LevelNetwork& network);

/// Coupling for network_from_detunings: contributes amplitude * |from><to| + h.c.
struct Coupling {
    LevelId from;
    LevelId to;
    ExactScalar amplitude;
};

/// Builds a network whose rotating frame reproduces `detunings` (ground levels get 0):
/// eps_n = E_n - Delta_n with E0 = 0, and each drive frequency is eps_from - eps_to.
LevelNetwork network_from_detunings(const std::vector<Level>& levels, const std::map<LevelId, Rational>& detunings,
                                    const std::vector<Coupling>& couplings);

/// lambda, pyramid, twelve-level, twelve-level-constrained, twelve-level-zeroed.
std::vector<std::string> demo_names();
/// Throws std::out_of_range for an unknown name.
LevelNetwork demo_network(std::string_view name);

}  // namespace darkstate
