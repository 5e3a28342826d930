#pragma once

#include "coevo/game.h"

namespace coevo {

enum class HeuristicMode : std::uint8_t { Full, PointsOnly };

// Pursuit-mode shaping weights: how many distance units one full unit of
// facing error (own heading off the line of sight) and of opponent exposure
// (opponent heading off the same line) are worth.
inline constexpr double kPursuitFacingWeight = 100.0;
inline constexpr double kPursuitExposureWeight = 25.0;

// How the positional "dot" feeding DistScore is computed. See dist_dot.
enum class DistDotMode : std::uint8_t { Pursuit, Literal, Facing };

struct HeuristicConfig {
    HeuristicMode mode = HeuristicMode::Full;
    double high_value = 1e6;
    double low_value = -1e6;
    DistDotMode dot_mode = DistDotMode::Pursuit;
};

struct FitnessPair {
    double fitness1 = 0.0;
    double fitness2 = 0.0;

    double of(int player) const { return player == 0 ? fitness1 : fitness2; }
    friend bool operator==(const FitnessPair&, const FitnessPair&) = default;
};

// Raw positional quantity for one player; smaller is better.
//   Pursuit: d + 100*(1 - u.h_own), u = unit vector toward the opponent:
//            distance plus facing error. Chasing closes d, tracking keeps
//            the error at 0, and flanking inflates the opponent's error.
//   Literal: (p_opp - p_own) . (h_opp - h_own). Symmetric between the two
//            players, so score differences cancel; kept for comparison.
//   Facing:  (p_opp - p_own) . h_own.
double dist_dot(const GameState& state, int player, DistDotMode mode);

// 100 / (dot + 100) with the denominator clamped below at 1.
double dist_score_from_dot(double dot);

// HIGH_VALUE inside the winning range, otherwise dist_score_from_dot.
double dist_score(const GameState& state, int player, const HeuristicConfig& cfg);

// Per-player score: DistScore in G1, nbPoints + DistScore in the weapon
// variants, nbPoints alone in PointsOnly mode (invalid for G1).
double score(const GameState& state, int player, const HeuristicConfig& cfg);

// Two-player fitness: (HIGH, LOW) / (LOW, HIGH) on a decided game, (0, 0) on
// a draw, zero-sum score difference otherwise.
FitnessPair evaluate_state(const GameState& state, const HeuristicConfig& cfg);

} // namespace coevo
