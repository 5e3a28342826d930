#pragma once

#include <chrono>
#include <cstdint>
#include <limits>

#include "coevo/game.h"

namespace coevo {

enum class BudgetMode : std::uint8_t { WallClockMs, ForwardCalls };

struct ControllerBudget {
    BudgetMode mode = BudgetMode::WallClockMs;
    long limit = 10; // milliseconds or forward-model calls, per decision
};

// Per-decision budget meter. In ForwardCalls mode try_consume() is the hard
// cap; in WallClockMs mode controllers poll expired() once per generation or
// iteration and may overshoot by at most one.
class BudgetTracker {
public:
    explicit BudgetTracker(ControllerBudget budget)
        : budget_(budget), start_(std::chrono::steady_clock::now()) {}

    bool try_consume() {
        if (budget_.mode == BudgetMode::ForwardCalls && calls_ >= budget_.limit) return false;
        ++calls_;
        return true;
    }

    bool expired() const {
        if (budget_.mode == BudgetMode::ForwardCalls) return calls_ >= budget_.limit;
        return elapsed_ms() >= budget_.limit;
    }

    long calls() const { return calls_; }
    const ControllerBudget& budget() const { return budget_; }

    // Forward calls still available; unbounded under a wall-clock budget.
    long remaining_calls() const {
        if (budget_.mode != BudgetMode::ForwardCalls) return std::numeric_limits<long>::max();
        return budget_.limit - calls_;
    }

    double elapsed_ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start_).count();
    }

private:
    ControllerBudget budget_;
    long calls_ = 0;
    std::chrono::steady_clock::time_point start_;
};

// Counting wrapper around the engine: all planning simulations go through
// here so the forward-call cap is enforced in one place.
class ForwardModel {
public:
    explicit ForwardModel(BudgetTracker& tracker) : tracker_(tracker) {}

    // False (state untouched) when the budget is exhausted.
    bool step(GameState& state, Action a1, Action a2) {
        if (!tracker_.try_consume()) return false;
        coevo::step(state, a1, a2);
        return true;
    }

    BudgetTracker& tracker() { return tracker_; }

private:
    BudgetTracker& tracker_;
};

} // namespace coevo
