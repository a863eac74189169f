#include "darkstate/rotating_frame.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace darkstate {

const char* to_string(FrameErrorKind kind) {
    switch (kind) {
        case FrameErrorKind::CycleInconsistent: return "CycleInconsistent";
        case FrameErrorKind::GroundDegeneracyImpossible: return "GroundDegeneracyImpossible";
        case FrameErrorKind::NoGroundLevel: return "NoGroundLevel";
    }
    return "?";
}

namespace {

Rational abs_of(const Rational& x) { return x.abs(); }
double abs_of(double x) { return std::abs(x); }

double as_double(const Rational& x) { return x.to_double(); }
double as_double(double x) { return x; }

template <class R>
R convert(const Rational& x) {
    if constexpr (std::is_same_v<R, Rational>)
        return x;
    else
        return x.to_double();
}

template <class R>
bool consistent(const R& mismatch, const R& reference) {
    if constexpr (std::is_same_v<R, Rational>)
        return mismatch.is_zero();
    else
        return std::abs(mismatch) <= kFrameTolerance * std::max(1.0, std::abs(reference));
}

struct Edge {
    LevelId from;
    LevelId to;
    std::size_t index;
};

}  // namespace

template <class R>
RotatingFrame<R> solve_frame(const LevelNetwork& network, const Classification& classification) {
    if (classification.ground_ids.empty())
        throw FrameError(FrameErrorKind::NoGroundLevel, 0, 0, 0.0, "NoGroundLevel: network has no ground manifold");

    std::map<LevelId, std::vector<Edge>> adjacency;
    std::map<LevelId, R> energy;
    for (const auto& l : network.levels) {
        adjacency[l.id];
        energy[l.id] = convert<R>(l.energy);
    }
    std::vector<R> omega;
    for (std::size_t k = 0; k < network.transitions.size(); ++k) {
        const auto& t = network.transitions[k];
        omega.push_back(convert<R>(t.drive_frequency));
        adjacency[t.from].push_back({t.from, t.to, k});
        adjacency[t.to].push_back({t.from, t.to, k});
    }
    const std::set<LevelId> ground(classification.ground_ids.begin(), classification.ground_ids.end());

    RotatingFrame<R> frame;
    frame.ground_energy = R{0};
    std::map<LevelId, LevelId> anchor_of;
    std::vector<bool> tree_edge(network.transitions.size(), false);

    for (const auto& [start, unused] : adjacency) {
        if (frame.epsilon.contains(start)) continue;

        std::vector<LevelId> component;
        {
            std::set<LevelId> seen{start};
            std::deque<LevelId> queue{start};
            while (!queue.empty()) {
                const LevelId n = queue.front();
                queue.pop_front();
                component.push_back(n);
                for (const auto& e : adjacency[n]) {
                    const LevelId m = e.from == n ? e.to : e.from;
                    if (seen.insert(m).second) queue.push_back(m);
                }
            }
            std::sort(component.begin(), component.end());
        }

        // Lowest-id ground level anchors the component; otherwise the lowest id with eps = 0.
        const auto anchor_it =
            std::find_if(component.begin(), component.end(), [&](LevelId id) { return ground.contains(id); });
        const bool has_ground = anchor_it != component.end();
        const LevelId anchor = has_ground ? *anchor_it : component.front();
        for (LevelId id : component) anchor_of[id] = anchor;
        frame.epsilon[anchor] = has_ground ? R(energy[anchor] - frame.ground_energy) : R{0};

        std::deque<LevelId> queue{anchor};
        while (!queue.empty()) {
            const LevelId n = queue.front();
            queue.pop_front();
            for (const auto& e : adjacency[n]) {
                const LevelId m = e.from == n ? e.to : e.from;
                if (frame.epsilon.contains(m)) continue;
                // omega = eps_from - eps_to
                frame.epsilon[m] = e.from == n ? R(frame.epsilon[n] - omega[e.index])
                                               : R(frame.epsilon[n] + omega[e.index]);
                tree_edge[e.index] = true;
                queue.push_back(m);
            }
        }
    }

    for (std::size_t k = 0; k < network.transitions.size(); ++k) {
        if (tree_edge[k]) continue;
        const auto& t = network.transitions[k];
        const R mismatch = omega[k] - (frame.epsilon[t.from] - frame.epsilon[t.to]);
        if (!consistent(mismatch, omega[k])) {
            std::ostringstream msg;
            msg << "CycleInconsistent: drive on " << t.from << "<->" << t.to << " misses the frame by "
                << as_double(mismatch) << "; no rotating frame exists";
            throw FrameError(FrameErrorKind::CycleInconsistent, t.from, t.to, as_double(mismatch), msg.str());
        }
    }

    // All ground levels must share E_g - eps_g = E0. Levels in other components are free to
    // shift, so only same-component pairs can conflict; anchors satisfy it by construction.
    for (LevelId g : classification.ground_ids) {
        const R offset = energy[g] - frame.epsilon[g] - frame.ground_energy;
        if (!consistent(offset, std::max(abs_of(energy[g]), abs_of(frame.epsilon[g])))) {
            const LevelId partner = anchor_of[g];
            std::ostringstream msg;
            msg << "GroundDegeneracyImpossible: ground levels " << partner << " and " << g
                << " are forced to different E - eps (mismatch " << as_double(offset) << ')';
            throw FrameError(FrameErrorKind::GroundDegeneracyImpossible, partner, g, as_double(offset), msg.str());
        }
    }

    for (const auto& l : network.levels) {
        if (ground.contains(l.id))
            frame.detuning[l.id] = R{0};
        else
            frame.detuning[l.id] = energy[l.id] - frame.epsilon[l.id] - frame.ground_energy;
    }
    return frame;
}

template <class R>
R transformed_hamiltonian_check(const LevelNetwork& network, const RotatingFrame<R>& frame) {
    R worst{0};
    for (const auto& t : network.transitions) {
        const R residual = abs_of(R(convert<R>(t.drive_frequency) - (frame.epsilon.at(t.from) - frame.epsilon.at(t.to))));
        if (residual > worst) worst = residual;
    }
    return worst;
}

template RotatingFrame<Rational> solve_frame<Rational>(const LevelNetwork&, const Classification&);
template RotatingFrame<double> solve_frame<double>(const LevelNetwork&, const Classification&);
template Rational transformed_hamiltonian_check<Rational>(const LevelNetwork&, const RotatingFrame<Rational>&);
template double transformed_hamiltonian_check<double>(const LevelNetwork&, const RotatingFrame<double>&);

}  // namespace darkstate
