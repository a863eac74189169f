#include "darkstate/network_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace darkstate {

using nlohmann::json;

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::SyntaxError: return "SyntaxError";
        case ParseErrorKind::MissingField: return "MissingField";
        case ParseErrorKind::BadRole: return "BadRole";
        case ParseErrorKind::NonNumeric: return "NonNumeric";
        case ParseErrorKind::IoError: return "IoError";
    }
    return "?";
}

namespace {

[[noreturn]] void field_error(ParseErrorKind kind, const std::string& where, const std::string& what) {
    throw ParseError(kind, 0, 0, where, std::string(to_string(kind)) + " at " + where + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) field_error(ParseErrorKind::MissingField, where, "expected an object");
    const auto it = obj.find(key);
    if (it == obj.end()) field_error(ParseErrorKind::MissingField, where, std::string("missing field '") + key + "'");
    return *it;
}

Rational number_field(const json& value, const std::string& where) {
    try {
        if (value.is_string()) return Rational::parse(value.get<std::string>());
        if (value.is_number_integer()) return Rational(value.get<long long>());
        if (value.is_number_unsigned()) return Rational::parse(std::to_string(value.get<unsigned long long>()));
        if (value.is_number_float()) return Rational::parse(value.dump());
    } catch (const std::invalid_argument& e) {
        field_error(ParseErrorKind::NonNumeric, where, e.what());
    }
    field_error(ParseErrorKind::NonNumeric, where, "expected a number or numeric string, got " + value.dump());
}

LevelId id_field(const json& value, const std::string& where) {
    if (!value.is_number_integer()) field_error(ParseErrorKind::NonNumeric, where, "level id must be an integer");
    return static_cast<LevelId>(value.get<long long>());
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

LevelNetwork parse_network(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        std::ostringstream msg;
        msg << "SyntaxError at line " << line << ", column " << column << ": " << e.what();
        throw ParseError(ParseErrorKind::SyntaxError, line, column, "", msg.str());
    }
    if (!doc.is_object()) throw ParseError(ParseErrorKind::SyntaxError, 1, 1, "", "SyntaxError: top level must be an object");

    LevelNetwork network;
    const json& levels = require(doc, "levels", "/");
    if (!levels.is_array()) field_error(ParseErrorKind::MissingField, "/levels", "expected an array");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const std::string where = "/levels/" + std::to_string(i);
        const json& l = levels[i];
        Level level;
        level.id = id_field(require(l, "id", where), where + "/id");
        level.energy = number_field(require(l, "energy", where), where + "/energy");
        const json& role = require(l, "role", where);
        const std::string role_text = role.is_string() ? role.get<std::string>() : role.dump();
        if (role_text == "ground" || role_text == "Ground")
            level.role = Role::Ground;
        else if (role_text == "excited" || role_text == "Excited")
            level.role = Role::Excited;
        else
            field_error(ParseErrorKind::BadRole, where + "/role", "role must be \"ground\" or \"excited\", got " + role.dump());
        network.levels.push_back(std::move(level));
    }

    const json& transitions = require(doc, "transitions", "/");
    if (!transitions.is_array()) field_error(ParseErrorKind::MissingField, "/transitions", "expected an array");
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const std::string where = "/transitions/" + std::to_string(i);
        const json& t = transitions[i];
        Transition tr;
        tr.from = id_field(require(t, "from", where), where + "/from");
        tr.to = id_field(require(t, "to", where), where + "/to");
        const Rational re = number_field(require(t, "omega_re", where), where + "/omega_re");
        const Rational im = t.contains("omega_im") ? number_field(t["omega_im"], where + "/omega_im") : Rational{};
        tr.amplitude = ExactScalar(re, im);
        tr.drive_frequency = number_field(require(t, "drive_frequency", where), where + "/drive_frequency");
        network.transitions.push_back(std::move(tr));
    }
    return network;
}

LevelNetwork parse_network_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(ParseErrorKind::IoError, 0, 0, path.string(), "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_network(buf.str());
}

std::string format_network(const LevelNetwork& network) {
    json doc;
    doc["levels"] = json::array();
    for (const auto& l : network.levels)
        doc["levels"].push_back(
            {{"id", l.id}, {"energy", l.energy.str()}, {"role", l.role == Role::Ground ? "ground" : "excited"}});
    doc["transitions"] = json::array();
    for (const auto& t : network.transitions)
        doc["transitions"].push_back({{"from", t.from},
                                      {"to", t.to},
                                      {"omega_re", t.amplitude.real().str()},
                                      {"omega_im", t.amplitude.imag().str()},
                                      {"drive_frequency", t.drive_frequency.str()}});
    return doc.dump(2) + "\n";
}

LevelNetwork network_from_detunings(const std::vector<Level>& levels, const std::map<LevelId, Rational>& detunings,
                                    const std::vector<Coupling>& couplings) {
    std::map<LevelId, Rational> epsilon;
    for (const auto& l : levels) {
        const auto it = detunings.find(l.id);
        const Rational delta = l.role == Role::Ground || it == detunings.end() ? Rational{} : it->second;
        epsilon[l.id] = l.energy - delta;
    }
    LevelNetwork network;
    network.levels = levels;
    for (const auto& c : couplings)
        network.transitions.push_back({c.from, c.to, c.amplitude, epsilon.at(c.from) - epsilon.at(c.to)});
    return network;
}

std::vector<std::string> demo_names() {
    return {"lambda", "pyramid", "twelve-level", "twelve-level-constrained", "twelve-level-zeroed"};
}

namespace {

LevelNetwork lambda_demo() {
    // Delta_1 = 1, Omega_1 = 1, Omega_2 = 2; ground levels split by 1/2 in bare energy.
    const std::vector<Level> levels{{1, Rational(10), Role::Excited}, {2, Rational(0), Role::Ground},
                                    {3, Rational(1, 2), Role::Ground}};
    return network_from_detunings(levels, {{1, Rational(1)}}, {{1, 2, 1}, {1, 3, 2}});
}

LevelNetwork pyramid_demo() {
    // Level 1 (Delta_2 = 2) couples only to the excited levels 2 and 3 (Delta_1 = 1).
    const std::vector<Level> levels{{1, Rational(20), Role::Excited}, {2, Rational(12), Role::Excited},
                                    {3, Rational(11), Role::Excited}, {4, Rational(0), Role::Ground},
                                    {5, Rational(1, 4), Role::Ground}, {6, Rational(1, 2), Role::Ground}};
    return network_from_detunings(levels, {{1, Rational(2)}, {2, Rational(1)}, {3, Rational(1)}},
                                  {{1, 2, Rational(1, 2)},
                                   {1, 3, Rational(1, 3)},
                                   {2, 4, 1},
                                   {2, 5, 2},
                                   {3, 5, 3},
                                   {3, 6, 4}});
}

/// Omega_k = k except where overridden; a zero amplitude drops the transition.
LevelNetwork twelve_level_demo(const std::map<int, Rational>& overrides) {
    std::vector<Level> levels;
    std::map<LevelId, Rational> detunings;
    for (LevelId id = 1; id <= 12; ++id) {
        if (id <= 2) {
            levels.push_back({id, Rational(29 + id), Role::Excited});
            detunings[id] = Rational(2);
        } else if (id <= 7) {
            levels.push_back({id, Rational(17 + id), Role::Excited});
            detunings[id] = Rational(1);
        } else {
            levels.push_back({id, Rational(id - 8, 10), Role::Ground});
        }
    }
    const std::vector<std::pair<LevelId, LevelId>> edges{
        {1, 3}, {1, 4}, {2, 4}, {2, 5}, {2, 6}, {2, 7},  // Omega_1..6: excited-excited
        {3, 8}, {3, 9}, {4, 9}, {4, 10}, {5, 9}, {5, 11}, {6, 10}, {6, 12}, {7, 11}, {7, 12}};  // Omega_7..16
    std::vector<Coupling> couplings;
    for (int k = 1; k <= 16; ++k) {
        const auto it = overrides.find(k);
        const Rational omega = it == overrides.end() ? Rational(k) : it->second;
        if (omega.is_zero()) continue;
        couplings.push_back({edges[k - 1].first, edges[k - 1].second, omega});
    }
    return network_from_detunings(levels, detunings, couplings);
}

}  // namespace

LevelNetwork demo_network(std::string_view name) {
    if (name == "lambda") return lambda_demo();
    if (name == "pyramid") return pyramid_demo();
    if (name == "twelve-level") return twelve_level_demo({});
    // Omega_9 Omega_12 Omega_13 Omega_16 = Omega_10 Omega_11 Omega_14 Omega_15, solved for Omega_12.
    if (name == "twelve-level-constrained")
        return twelve_level_demo({{12, Rational(10 * 11 * 14 * 15) / Rational(9 * 13 * 16)}});
    if (name == "twelve-level-zeroed") return twelve_level_demo({{11, Rational(0)}, {12, Rational(0)}});
    throw std::out_of_range("unknown demo '" + std::string(name) + "'");
}

}  // namespace darkstate
