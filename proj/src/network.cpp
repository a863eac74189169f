#include "darkstate/network.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace darkstate {

const Level* LevelNetwork::find(LevelId id) const {
    for (const auto& l : levels)
        if (l.id == id) return &l;
    return nullptr;
}

const char* to_string(ValidationRule rule) {
    switch (rule) {
        case ValidationRule::DuplicateId: return "DuplicateId";
        case ValidationRule::NonContiguousIds: return "NonContiguousIds";
        case ValidationRule::DanglingTransition: return "DanglingTransition";
        case ValidationRule::SelfLoop: return "SelfLoop";
        case ValidationRule::DuplicatePair: return "DuplicatePair";
        case ValidationRule::GroundGroundTransition: return "GroundGroundTransition";
        case ValidationRule::ZeroAmplitude: return "ZeroAmplitude";
        case ValidationRule::MissingGround: return "MissingGround";
        case ValidationRule::MissingExcited: return "MissingExcited";
    }
    return "?";
}

namespace {

ValidationError make_error(ValidationRule rule, std::vector<LevelId> ids, const std::string& what) {
    std::ostringstream msg;
    msg << to_string(rule) << ": " << what;
    if (!ids.empty()) {
        msg << " (level";
        if (ids.size() > 1) msg << 's';
        for (std::size_t i = 0; i < ids.size(); ++i) msg << (i ? ", " : " ") << ids[i];
        msg << ')';
    }
    return {rule, std::move(ids), msg.str()};
}

}  // namespace

std::optional<ValidationError> validate(const LevelNetwork& network) {
    std::map<LevelId, Role> roles;
    for (const auto& l : network.levels) {
        if (!roles.emplace(l.id, l.role).second)
            return make_error(ValidationRule::DuplicateId, {l.id}, "level id appears more than once");
    }
    LevelId expected = 1;
    for (const auto& [id, role] : roles) {
        if (id != expected)
            return make_error(ValidationRule::NonContiguousIds, {id}, "level ids must form the range 1..N");
        ++expected;
    }

    std::set<std::pair<LevelId, LevelId>> pairs;
    for (const auto& t : network.transitions) {
        const auto from = roles.find(t.from);
        const auto to = roles.find(t.to);
        if (from == roles.end() || to == roles.end())
            return make_error(ValidationRule::DanglingTransition, {from == roles.end() ? t.from : t.to},
                              "transition endpoint is not a level");
        if (t.from == t.to) return make_error(ValidationRule::SelfLoop, {t.from}, "transition from a level to itself");
        if (!pairs.emplace(std::min(t.from, t.to), std::max(t.from, t.to)).second)
            return make_error(ValidationRule::DuplicatePair, {t.from, t.to}, "more than one transition per level pair");
        if (from->second == Role::Ground && to->second == Role::Ground)
            return make_error(ValidationRule::GroundGroundTransition, {t.from, t.to},
                              "ground levels cannot be coupled to each other");
        if (t.amplitude.is_zero())
            return make_error(ValidationRule::ZeroAmplitude, {t.from, t.to},
                              "transition amplitude must be nonzero (omit absent couplings)");
    }

    const bool any_ground = std::any_of(roles.begin(), roles.end(), [](auto& r) { return r.second == Role::Ground; });
    const bool any_excited = std::any_of(roles.begin(), roles.end(), [](auto& r) { return r.second == Role::Excited; });
    if (!any_ground) return make_error(ValidationRule::MissingGround, {}, "network has no ground level");
    if (!any_excited) return make_error(ValidationRule::MissingExcited, {}, "network has no excited level");
    return std::nullopt;
}

void require_valid(const LevelNetwork& network) {
    if (auto err = validate(network)) throw InvalidNetwork(std::move(*err));
}

Classification classify(const LevelNetwork& network) {
    std::map<LevelId, Role> roles;
    for (const auto& l : network.levels) roles.emplace(l.id, l.role);

    std::set<LevelId> connected;
    for (const auto& t : network.transitions) {
        const Role a = roles.at(t.from);
        const Role b = roles.at(t.to);
        if (a == Role::Excited && b == Role::Ground) connected.insert(t.from);
        if (a == Role::Ground && b == Role::Excited) connected.insert(t.to);
    }

    Classification c;
    for (const auto& [id, role] : roles) {
        if (role == Role::Ground)
            c.ground_ids.push_back(id);
        else if (connected.contains(id))
            c.connected_excited_ids.push_back(id);
        else
            c.disconnected_excited_ids.push_back(id);
    }
    return c;
}

}  // namespace darkstate
