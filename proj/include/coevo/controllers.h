#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coevo/budget.h"
#include "coevo/evaluate.h"
#include "coevo/onestep.h"
#include "coevo/rollout.h"

namespace coevo {

// A decision maker for one seat. Instances are single-threaded and own their
// rng stream; they never mutate the real game state.
class Controller {
public:
    virtual ~Controller() = default;

    // Name the instance was registered under, including parameter suffixes.
    virtual const std::string& name() const = 0;

    // Rekeys the controller's rng stream; called once per match.
    virtual void reset(std::uint64_t seed) = 0;

    // Picks a legal action for `player` within the given budget.
    virtual Action act(const GameState& state, int player, BudgetTracker& tracker) = 0;
};

struct ControllerParams {
    int lambda = 10;        // population size
    double proba_mut = 0.3; // per-gene mutation probability
    int t_h = 10;           // genome length (tactical horizon)
    int t_o = 1;            // ticks per macro-action
    int sub_pop_size = 3;   // rival sample size per individual (rhca)
    int mcts_depth = 10;    // total simulation depth (olmcts)
    OneStepPolicy policy = OneStepPolicy::MaxMeanDiff;
};

// Test hook into the evolutionary loops. `which` is 0 for the controller's
// own population, 1 for the rival population (rhca only).
class RheaObserver {
public:
    virtual ~RheaObserver() = default;
    virtual void on_rebuild(int generation, int which, const Population& pop) = 0;
    virtual void on_sorted(int generation, int which, const Population& pop) = 0;
};

// Evaluates every individual of x against sub_pop_size rivals sampled from y
// (with replacement), accumulating averages on both sides, then stable-sorts
// both populations by decreasing average fitness. Unevaluated individuals
// rank last in insertion order. x plays the given seat, y the other.
void evaluate_and_sort(Population& x, Population& y, int sub_pop_size, const GameState& state,
                       int player, int t_o, const HeuristicConfig& cfg, ForwardModel& fm,
                       RngStream& rng);

// Builds a controller from a registry spec such as "rnd", "olmcts",
// "onestep:policy=wald" or "rhga:lambda=12,probamut=0.2".
// Throws std::invalid_argument on unknown names, keys or values.
std::unique_ptr<Controller> make_controller(const std::string& spec, const HeuristicConfig& cfg);

// Base names accepted by make_controller.
std::vector<std::string> registered_controller_names();

// Scripted policies, exposed for direct use in tests.
Action rnd_act(const GameState& state, int player, RngStream& rng);
Action rot_act();
Action ras_act(const GameState& state, int player);

// Factories with explicit parameters (the registry wraps these).
std::unique_ptr<Controller> make_rnd(std::string name);
std::unique_ptr<Controller> make_rot(std::string name);
std::unique_ptr<Controller> make_ras(std::string name);
std::unique_ptr<Controller> make_onestep(std::string name, const HeuristicConfig& cfg,
                                         OneStepPolicy policy);
std::unique_ptr<Controller> make_olmcts(std::string name, const HeuristicConfig& cfg,
                                        const ControllerParams& params);
std::unique_ptr<Controller> make_rhga(std::string name, const HeuristicConfig& cfg,
                                      const ControllerParams& params,
                                      RheaObserver* observer = nullptr);
std::unique_ptr<Controller> make_rhca(std::string name, const HeuristicConfig& cfg,
                                      const ControllerParams& params,
                                      RheaObserver* observer = nullptr);

} // namespace coevo
