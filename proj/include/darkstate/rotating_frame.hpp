#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "darkstate/network.hpp"

namespace darkstate {

/// Per-level frame shifts eps_n (|n> -> exp(i eps_n t)|n>) and the resulting detunings
/// Delta_n = E_n - eps_n - E0. R is Rational (exact) or double (float).
template <class R>
struct RotatingFrame {
    std::map<LevelId, R> epsilon;
    R ground_energy{};  // E0, the common value of E_g - eps_g over ground levels
    std::map<LevelId, R> detuning;
};

enum class FrameErrorKind { CycleInconsistent, GroundDegeneracyImpossible, NoGroundLevel };

const char* to_string(FrameErrorKind kind);

class FrameError : public std::runtime_error {
public:
    FrameError(FrameErrorKind kind, LevelId a, LevelId b, double mismatch, const std::string& what)
        : std::runtime_error(what), kind_(kind), first_(a), second_(b), mismatch_(mismatch) {}

    [[nodiscard]] FrameErrorKind kind() const { return kind_; }
    /// Offending edge (CycleInconsistent) or ground pair (GroundDegeneracyImpossible).
    [[nodiscard]] LevelId first() const { return first_; }
    [[nodiscard]] LevelId second() const { return second_; }
    [[nodiscard]] double mismatch() const { return mismatch_; }

private:
    FrameErrorKind kind_;
    LevelId first_;
    LevelId second_;
    double mismatch_;
};

/// Relative tolerance for drive-frequency consistency in float mode:
/// |mismatch| <= kFrameTolerance * max(1, |omega|).
inline constexpr double kFrameTolerance = 1e-9;

/// Assigns eps by spanning-forest propagation over the transition graph and checks every
/// non-tree edge (cycle consistency) and the common ground offset E0. E0 is fixed to 0.
/// Throws FrameError when no frame exists.
template <class R>
RotatingFrame<R> solve_frame(const LevelNetwork& network, const Classification& classification);

/// Max over transitions of |omega_nm - (eps_n - eps_m)|. Zero for an exact valid frame.
template <class R>
R transformed_hamiltonian_check(const LevelNetwork& network, const RotatingFrame<R>& frame);

}  // namespace darkstate
