#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "darkstate/scalar.hpp"

namespace darkstate {

using LevelId = int;

enum class Role { Ground, Excited };

struct Level {
    LevelId id = 0;
    Rational energy;  // angular frequency units, hbar = 1
    Role role = Role::Excited;
};

/// Drive between two levels: contributes Omega |from><to| + h.c. to H, oscillating at
/// drive_frequency = eps_from - eps_to in the rotating frame.
struct Transition {
    LevelId from = 0;
    LevelId to = 0;
    ExactScalar amplitude;
    Rational drive_frequency;
};

/// Levels plus their drives. All values are exact; float runs round them on use.
struct LevelNetwork {
    std::vector<Level> levels;
    std::vector<Transition> transitions;

    [[nodiscard]] std::size_t size() const { return levels.size(); }
    [[nodiscard]] const Level* find(LevelId id) const;
};

enum class ValidationRule {
    DuplicateId,
    NonContiguousIds,
    DanglingTransition,
    SelfLoop,
    DuplicatePair,
    GroundGroundTransition,
    ZeroAmplitude,
    MissingGround,
    MissingExcited,
};

const char* to_string(ValidationRule rule);

struct ValidationError {
    ValidationRule rule;
    std::vector<LevelId> ids;  // offending level ids
    std::string message;
};

/// Checks every network invariant; the first violated rule is reported.
std::optional<ValidationError> validate(const LevelNetwork& network);

class InvalidNetwork : public std::runtime_error {
public:
    explicit InvalidNetwork(ValidationError error)
        : std::runtime_error(error.message), error_(std::move(error)) {}
    [[nodiscard]] const ValidationError& error() const { return error_; }

private:
    ValidationError error_;
};

/// Throws InvalidNetwork on the first violated invariant.
void require_valid(const LevelNetwork& network);

/// Ground / directly-connected excited / disconnected excited partition, each ascending by id.
struct Classification {
    std::vector<LevelId> ground_ids;
    std::vector<LevelId> connected_excited_ids;
    std::vector<LevelId> disconnected_excited_ids;

    [[nodiscard]] std::size_t num_ground() const { return ground_ids.size(); }
    [[nodiscard]] std::size_t num_connected() const { return connected_excited_ids.size(); }
    [[nodiscard]] std::size_t num_excited() const {
        return connected_excited_ids.size() + disconnected_excited_ids.size();
    }
    [[nodiscard]] std::size_t size() const { return num_ground() + num_excited(); }

    friend bool operator==(const Classification&, const Classification&) = default;
};

/// "Connected" means a direct transition to some ground level; multi-hop paths don't count.
Classification classify(const LevelNetwork& network);

}  // namespace darkstate
