#include <algorithm>
#include <limits>

#include "coevo/controllers.h"

namespace coevo {

namespace {

void sort_by_average_desc(Population& pop) {
    std::stable_sort(pop.begin(), pop.end(), [](const Individual& a, const Individual& b) {
        const double inf = std::numeric_limits<double>::infinity();
        const double ka = a.eval_count > 0 ? a.average_fitness() : -inf;
        const double kb = b.eval_count > 0 ? b.average_fitness() : -inf;
        return ka > kb;
    });
}

// Truncation selection with a 20% threshold at lambda=10: the two best stay
// as parents, the rest are rebuilt by uniform crossover plus per-gene
// mutation.
void breed_from_elites(Population& pop, double proba_mut, int alphabet, RngStream& rng) {
    const Individual& p1 = pop[0];
    const Individual& p2 = pop[1];
    for (std::size_t k = 2; k < pop.size(); ++k) {
        ActionSequence& child = pop[k].genome;
        child.resize(p1.genome.size());
        for (std::size_t g = 0; g < child.size(); ++g) {
            child[g] = rng.next_below(2) == 0 ? p1.genome[g] : p2.genome[g];
            if (rng.next_unit() < proba_mut)
                child[g] = static_cast<Action>(rng.next_below(static_cast<std::uint32_t>(alphabet)));
        }
        pop[k].reset_fitness();
    }
}

void init_population(Population& pop, int lambda, int t_h, int alphabet, RngStream& rng) {
    pop.resize(static_cast<std::size_t>(lambda));
    for (Individual& ind : pop) {
        randomize_genome(ind.genome, t_h, alphabet, rng);
        ind.reset_fitness();
    }
}

// Rolling-horizon carry-over: one real tick has passed since the last
// decision, so every surviving plan advances one gene and draws a fresh
// random tail gene. Falls back to a random restart on a shape mismatch.
void shift_or_init_population(Population& pop, int lambda, int t_h, int alphabet,
                              RngStream& rng) {
    if (static_cast<int>(pop.size()) != lambda ||
        static_cast<int>(pop.front().genome.size()) != t_h) {
        init_population(pop, lambda, t_h, alphabet, rng);
        return;
    }
    for (Individual& ind : pop) {
        ind.genome.erase(ind.genome.begin());
        ind.genome.push_back(
            static_cast<Action>(rng.next_below(static_cast<std::uint32_t>(alphabet))));
        ind.reset_fitness();
    }
}

class RhgaController final : public Controller {
public:
    RhgaController(std::string name, const HeuristicConfig& cfg, const ControllerParams& params,
                   RheaObserver* observer)
        : name_(std::move(name)), cfg_(cfg), params_(params), observer_(observer) {}

    const std::string& name() const override { return name_; }
    void reset(std::uint64_t seed) override {
        rng_ = RngStream(seed);
        pop_.clear();
    }

    Action act(const GameState& state, int player, BudgetTracker& tracker) override {
        ForwardModel fm(tracker);
        const int alphabet = state.variant.action_count();

        shift_or_init_population(pop_, params_.lambda, params_.t_h, alphabet, rng_);
        randomize_genome(rival_, params_.t_h, alphabet, rng_);
        evaluate_all(state, player, fm);
        sort_by_average_desc(pop_);
        if (observer_ != nullptr) observer_->on_sorted(0, 0, pop_);

        // Generations are atomic: a partially evaluated population sorts on
        // lopsided sample counts, so don't start one the budget can't finish.
        const long generation_cost =
            static_cast<long>(params_.lambda) * params_.t_h * params_.t_o;
        int generation = 0;
        while (!tracker.expired() && tracker.remaining_calls() >= generation_cost) {
            ++generation;
            randomize_genome(rival_, params_.t_h, alphabet, rng_);
            breed_from_elites(pop_, params_.proba_mut, alphabet, rng_);
            if (observer_ != nullptr) observer_->on_rebuild(generation, 0, pop_);
            evaluate_all(state, player, fm);
            sort_by_average_desc(pop_);
            if (observer_ != nullptr) observer_->on_sorted(generation, 0, pop_);
        }

        if (pop_[0].eval_count == 0) return rnd_act(state, player, rng_);
        return coerce_legal(state, player, pop_[0].genome[0]);
    }

private:
    // The whole population, elites included, is re-scored against the
    // current rival sequence.
    void evaluate_all(const GameState& state, int player, ForwardModel& fm) {
        for (Individual& ind : pop_) {
            ind.reset_fitness();
        }
        for (Individual& ind : pop_) {
            const RngStream sim_stream(rng_.next_u64());
            const RolloutResult r =
                player == 0
                    ? rollout_pair(state, ind.genome, rival_, params_.t_o, cfg_, fm, sim_stream)
                    : rollout_pair(state, rival_, ind.genome, params_.t_o, cfg_, fm, sim_stream);
            ind.add_fitness(r.fitness.of(player));
            if (r.budget_truncated) break;
        }
    }

    std::string name_;
    HeuristicConfig cfg_;
    ControllerParams params_;
    RheaObserver* observer_;
    RngStream rng_;
    Population pop_;
    ActionSequence rival_;
};

class RhcaController final : public Controller {
public:
    RhcaController(std::string name, const HeuristicConfig& cfg, const ControllerParams& params,
                   RheaObserver* observer)
        : name_(std::move(name)), cfg_(cfg), params_(params), observer_(observer) {}

    const std::string& name() const override { return name_; }
    void reset(std::uint64_t seed) override {
        rng_ = RngStream(seed);
        own_.clear();
        rivals_.clear();
    }

    Action act(const GameState& state, int player, BudgetTracker& tracker) override {
        ForwardModel fm(tracker);
        const int alphabet = state.variant.action_count();

        shift_or_init_population(own_, params_.lambda, params_.t_h, alphabet, rng_);
        // Rivals restart random every decision: a carried-over rival pool
        // converges on mutual facing, which flattens the closing gradient.
        init_population(rivals_, params_.lambda, params_.t_h, alphabet, rng_);
        evaluate_and_sort(own_, rivals_, params_.sub_pop_size, state, player, params_.t_o, cfg_,
                          fm, rng_);
        notify_sorted(0);

        // Same atomic-generation rule as rhga; one rhca generation costs
        // lambda * SubPopSize rollouts.
        const long generation_cost = static_cast<long>(params_.lambda) * params_.sub_pop_size *
                                     params_.t_h * params_.t_o;
        int generation = 0;
        while (!tracker.expired() && tracker.remaining_calls() >= generation_cost) {
            ++generation;
            breed_from_elites(rivals_, params_.proba_mut, alphabet, rng_);
            breed_from_elites(own_, params_.proba_mut, alphabet, rng_);
            if (observer_ != nullptr) {
                observer_->on_rebuild(generation, 0, own_);
                observer_->on_rebuild(generation, 1, rivals_);
            }
            evaluate_and_sort(own_, rivals_, params_.sub_pop_size, state, player, params_.t_o,
                              cfg_, fm, rng_);
            notify_sorted(generation);
        }

        if (own_[0].eval_count == 0) return rnd_act(state, player, rng_);
        return coerce_legal(state, player, own_[0].genome[0]);
    }

private:
    void notify_sorted(int generation) {
        if (observer_ == nullptr) return;
        observer_->on_sorted(generation, 0, own_);
        observer_->on_sorted(generation, 1, rivals_);
    }

    std::string name_;
    HeuristicConfig cfg_;
    ControllerParams params_;
    RheaObserver* observer_;
    RngStream rng_;
    Population own_;
    Population rivals_;
};

} // namespace

void evaluate_and_sort(Population& x, Population& y, int sub_pop_size, const GameState& state,
                       int player, int t_o, const HeuristicConfig& cfg, ForwardModel& fm,
                       RngStream& rng) {
    for (Individual& ind : x) ind.reset_fitness();
    for (Individual& ind : y) ind.reset_fitness();

    bool out_of_budget = false;
    for (Individual& xi : x) {
        for (int s = 0; s < sub_pop_size && !out_of_budget; ++s) {
            Individual& yj = y[rng.next_below(static_cast<std::uint32_t>(y.size()))];
            const RngStream sim_stream(rng.next_u64());
            const RolloutResult r =
                player == 0 ? rollout_pair(state, xi.genome, yj.genome, t_o, cfg, fm, sim_stream)
                            : rollout_pair(state, yj.genome, xi.genome, t_o, cfg, fm, sim_stream);
            xi.add_fitness(r.fitness.of(player));
            yj.add_fitness(r.fitness.of(1 - player));
            out_of_budget = r.budget_truncated;
        }
        if (out_of_budget) break;
    }
    sort_by_average_desc(x);
    sort_by_average_desc(y);
}

std::unique_ptr<Controller> make_rhga(std::string name, const HeuristicConfig& cfg,
                                      const ControllerParams& params, RheaObserver* observer) {
    return std::make_unique<RhgaController>(std::move(name), cfg, params, observer);
}

std::unique_ptr<Controller> make_rhca(std::string name, const HeuristicConfig& cfg,
                                      const ControllerParams& params, RheaObserver* observer) {
    return std::make_unique<RhcaController>(std::move(name), cfg, params, observer);
}

} // namespace coevo
