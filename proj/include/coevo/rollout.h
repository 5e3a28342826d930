#pragma once

#include <span>
#include <vector>

#include "coevo/budget.h"
#include "coevo/evaluate.h"

namespace coevo {

using ActionSequence = std::vector<Action>;

// One evolvable plan: a fixed-length action genome plus running fitness.
struct Individual {
    ActionSequence genome;
    double fitness_sum = 0.0;
    int eval_count = 0;

    double average_fitness() const { return fitness_sum / eval_count; }
    void reset_fitness() { fitness_sum = 0.0; eval_count = 0; }
    void add_fitness(double f) { fitness_sum += f; ++eval_count; }
};

using Population = std::vector<Individual>;

// Gene executed when its action is illegal in the simulated state.
inline constexpr Action kCoercedAction = Action::RotateCW;

inline Action coerce_legal(const GameState& state, int player, Action a) {
    return is_legal(state, player, a) ? a : kCoercedAction;
}

struct RolloutResult {
    FitnessPair fitness;
    int ticks_advanced = 0;
    bool budget_truncated = false;
};

// Plays seq1 against seq2 from a copy of `state`, each gene repeated t_o
// ticks, stopping early on a terminal state, and evaluates where it ends.
// The copy's rng stream is replaced by `sim_stream` so planning noise never
// touches the caller's stream. Budget exhaustion mid-rollout returns the
// evaluation of the partial state, flagged.
RolloutResult rollout_pair(const GameState& state, std::span<const Action> seq1,
                           std::span<const Action> seq2, int t_o, const HeuristicConfig& cfg,
                           ForwardModel& fm, RngStream sim_stream);

// Fills `genome` with uniform draws from the variant's action alphabet.
void randomize_genome(ActionSequence& genome, int length, int alphabet, RngStream& rng);

} // namespace coevo
