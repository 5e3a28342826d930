#include "coevo/rollout.h"

namespace coevo {

RolloutResult rollout_pair(const GameState& state, std::span<const Action> seq1,
                           std::span<const Action> seq2, int t_o, const HeuristicConfig& cfg,
                           ForwardModel& fm, RngStream sim_stream) {
    GameState sim = state;
    sim.rng = sim_stream;

    RolloutResult out;
    const std::size_t genes = std::min(seq1.size(), seq2.size());
    for (std::size_t g = 0; g < genes && !sim.terminal(); ++g) {
        for (int rep = 0; rep < t_o && !sim.terminal(); ++rep) {
            const Action a1 = coerce_legal(sim, 0, seq1[g]);
            const Action a2 = coerce_legal(sim, 1, seq2[g]);
            if (!fm.step(sim, a1, a2)) {
                out.budget_truncated = true;
                out.fitness = evaluate_state(sim, cfg);
                return out;
            }
            ++out.ticks_advanced;
        }
    }
    out.fitness = evaluate_state(sim, cfg);
    return out;
}

void randomize_genome(ActionSequence& genome, int length, int alphabet, RngStream& rng) {
    genome.resize(static_cast<std::size_t>(length));
    for (Action& gene : genome)
        gene = static_cast<Action>(rng.next_below(static_cast<std::uint32_t>(alphabet)));
}

} // namespace coevo
