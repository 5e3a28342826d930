#include "coevo/onestep.h"

#include <limits>

namespace coevo {

PayoffMatrix one_step_matrix(const GameState& state, const HeuristicConfig& cfg,
                             ForwardModel* fm) {
    PayoffMatrix out;
    std::array<Action, 4> acts1{}, acts2{};
    out.rows = legal_actions(state, 0, acts1);
    out.cols = legal_actions(state, 1, acts2);
    out.row_actions = acts1;
    out.col_actions = acts2;

    const RngStream probe = state.rng.child(kOneStepProbeStream);
    for (int i = 0; i < out.rows; ++i) {
        for (int j = 0; j < out.cols; ++j) {
            GameState sim = state;
            sim.rng = probe;
            if (fm != nullptr) {
                if (!fm->step(sim, acts1[i], acts2[j])) return out;
            } else {
                step(sim, acts1[i], acts2[j]);
            }
            const FitnessPair fit = evaluate_state(sim, cfg);
            out.m[i][j] = fit.fitness1;
            out.m_prime[i][j] = fit.fitness2;
        }
    }
    return out;
}

std::optional<OneStepPolicy> one_step_policy_from_name(const std::string& name) {
    if (name == "wald") return OneStepPolicy::Wald;
    if (name == "max_mean") return OneStepPolicy::MaxMean;
    if (name == "savage") return OneStepPolicy::Savage;
    if (name == "min_opp_mean") return OneStepPolicy::MinOppMean;
    if (name == "wald_diff") return OneStepPolicy::WaldDiff;
    if (name == "max_mean_diff") return OneStepPolicy::MaxMeanDiff;
    return std::nullopt;
}

const char* one_step_policy_name(OneStepPolicy p) {
    switch (p) {
    case OneStepPolicy::Wald: return "wald";
    case OneStepPolicy::MaxMean: return "max_mean";
    case OneStepPolicy::Savage: return "savage";
    case OneStepPolicy::MinOppMean: return "min_opp_mean";
    case OneStepPolicy::WaldDiff: return "wald_diff";
    case OneStepPolicy::MaxMeanDiff: return "max_mean_diff";
    }
    return "?";
}

namespace {

// View of the matrix from the acting player's side: n_self own actions,
// n_opp replies, self(i,j) own fitness, opp(i,j) opponent fitness.
struct SelfView {
    const PayoffMatrix& mat;
    bool self_is_row;

    int n_self() const { return self_is_row ? mat.rows : mat.cols; }
    int n_opp() const { return self_is_row ? mat.cols : mat.rows; }
    double self(int i, int j) const { return self_is_row ? mat.m[i][j] : mat.m_prime[j][i]; }
    double opp(int i, int j) const { return self_is_row ? mat.m_prime[i][j] : mat.m[j][i]; }
};

int argmax_over_self(const SelfView& v, double (*row_stat)(const SelfView&, int)) {
    int best = 0;
    double best_stat = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < v.n_self(); ++i) {
        const double stat = row_stat(v, i);
        if (stat > best_stat) {
            best_stat = stat;
            best = i;
        }
    }
    return best;
}

double row_min_self(const SelfView& v, int i) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < v.n_opp(); ++j) m = std::min(m, v.self(i, j));
    return m;
}

double row_sum_self(const SelfView& v, int i) {
    double s = 0.0;
    for (int j = 0; j < v.n_opp(); ++j) s += v.self(i, j);
    return s;
}

double row_neg_max_opp(const SelfView& v, int i) {
    double m = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < v.n_opp(); ++j) m = std::max(m, v.opp(i, j));
    return -m;
}

double row_neg_sum_opp(const SelfView& v, int i) {
    double s = 0.0;
    for (int j = 0; j < v.n_opp(); ++j) s += v.opp(i, j);
    return -s;
}

double row_min_diff(const SelfView& v, int i) {
    double m = std::numeric_limits<double>::infinity();
    for (int j = 0; j < v.n_opp(); ++j) m = std::min(m, v.self(i, j) - v.opp(i, j));
    return m;
}

double row_sum_diff(const SelfView& v, int i) {
    double s = 0.0;
    for (int j = 0; j < v.n_opp(); ++j) s += v.self(i, j) - v.opp(i, j);
    return s;
}

} // namespace

int one_step_choose_row(const PayoffMatrix& matrix, OneStepPolicy policy, bool self_is_row) {
    const SelfView v{matrix, self_is_row};
    switch (policy) {
    case OneStepPolicy::Wald: return argmax_over_self(v, row_min_self);
    case OneStepPolicy::MaxMean: return argmax_over_self(v, row_sum_self);
    case OneStepPolicy::Savage: return argmax_over_self(v, row_neg_max_opp);
    case OneStepPolicy::MinOppMean: return argmax_over_self(v, row_neg_sum_opp);
    case OneStepPolicy::WaldDiff: return argmax_over_self(v, row_min_diff);
    case OneStepPolicy::MaxMeanDiff: return argmax_over_self(v, row_sum_diff);
    }
    return 0;
}

Action one_step_recommend(const PayoffMatrix& matrix, OneStepPolicy policy) {
    return matrix.row_actions[static_cast<std::size_t>(one_step_choose_row(matrix, policy, true))];
}

} // namespace coevo
