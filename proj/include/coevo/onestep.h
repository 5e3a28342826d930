#pragma once

#include <array>
#include <optional>
#include <string>

#include "coevo/budget.h"
#include "coevo/evaluate.h"

namespace coevo {

// Joint-action score table for one tick of lookahead. Rows are player 1
// actions, columns player 2 actions; m holds player 1 fitness, m_prime
// player 2 fitness (zero-sum cell by cell).
struct PayoffMatrix {
    int rows = 0;
    int cols = 0;
    std::array<Action, 4> row_actions{};
    std::array<Action, 4> col_actions{};
    std::array<std::array<double, 4>, 4> m{};
    std::array<std::array<double, 4>, 4> m_prime{};
};

// Probe stream id: every cell advances a copy whose rng is the same fixed
// child of the state's stream, so the matrix is a pure function of the state.
inline constexpr std::uint64_t kOneStepProbeStream = 0x05e1;

// Evaluates every joint action one tick ahead. When fm is non-null the
// probes are counted against its budget (and the matrix stops growing once
// the budget dies; filled cells stay valid).
PayoffMatrix one_step_matrix(const GameState& state, const HeuristicConfig& cfg,
                             ForwardModel* fm = nullptr);

enum class OneStepPolicy : std::uint8_t {
    Wald,        // argmax_i min_j m[i][j]
    MaxMean,     // argmax_i sum_j m[i][j]
    Savage,      // argmin_i max_j m'[i][j]
    MinOppMean,  // argmin_i sum_j m'[i][j]
    WaldDiff,    // Wald on m - m'
    MaxMeanDiff, // MaxMean on m - m'
};

std::optional<OneStepPolicy> one_step_policy_from_name(const std::string& name);
const char* one_step_policy_name(OneStepPolicy p);

// Row index chosen by a policy; ties break toward the lowest index.
// `self_is_row` selects whose action is being recommended: player 2 uses the
// transposed view with m and m_prime swapped.
int one_step_choose_row(const PayoffMatrix& matrix, OneStepPolicy policy, bool self_is_row);

// Recommended action for the row player (the spec-facing form).
Action one_step_recommend(const PayoffMatrix& matrix, OneStepPolicy policy);

} // namespace coevo
