#include "coevo/evaluate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coevo {

double dist_dot(const GameState& state, int player, DistDotMode mode) {
    const Ship& own = state.ships[player];
    const Ship& opp = state.ships[1 - player];
    const Vec2 offset = torus_offset(own.pos, opp.pos);
    switch (mode) {
    case DistDotMode::Literal:
        return offset.dot(opp.heading - own.heading);
    case DistDotMode::Facing:
        return offset.dot(own.heading);
    case DistDotMode::Pursuit: {
        const double d = offset.norm();
        if (d < 1e-12) return 0.0;
        const Vec2 u{offset.x / d, offset.y / d};
        // Aim error is measured against the edge of the winning cone, not
        // dead center: an approach held at the cone edge keeps a safe
        // impact parameter instead of overshooting through the opponent.
        double dot = d + kPursuitFacingWeight * std::abs(kWinCos - u.dot(own.heading));
        // Tail-side positioning only matters near the winning range; gating
        // it out at long range keeps distant evaluations quiet.
        const double gate = std::clamp((150.0 - d) / 100.0, 0.0, 1.0);
        dot += gate * kPursuitExposureWeight * (1.0 - u.dot(opp.heading));
        return dot;
    }
    }
    return 0.0;
}

double dist_score_from_dot(double dot) {
    double denom = dot + 100.0;
    if (denom < 1.0) denom = 1.0;
    return 100.0 / denom;
}

double dist_score(const GameState& state, int player, const HeuristicConfig& cfg) {
    if (in_winning_range(state, player)) return cfg.high_value;
    return dist_score_from_dot(dist_dot(state, player, cfg.dot_mode));
}

double score(const GameState& state, int player, const HeuristicConfig& cfg) {
    if (cfg.mode == HeuristicMode::PointsOnly) {
        if (!state.variant.weapons_enabled)
            throw std::logic_error("points-only heuristic needs a weapon variant");
        return nb_points(state.ships[player]);
    }
    double total = dist_score(state, player, cfg);
    if (state.variant.weapons_enabled) total += nb_points(state.ships[player]);
    return total;
}

FitnessPair evaluate_state(const GameState& state, const HeuristicConfig& cfg) {
    if (state.winner) {
        switch (*state.winner) {
        case Winner::Player1: return {cfg.high_value, cfg.low_value};
        case Winner::Player2: return {cfg.low_value, cfg.high_value};
        case Winner::Draw: return {0.0, 0.0};
        }
    }
    const double s1 = score(state, 0, cfg);
    const double s2 = score(state, 1, cfg);
    return {s1 - s2, s2 - s1};
}

} // namespace coevo
