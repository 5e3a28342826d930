#include <cmath>
#include <limits>

#include "coevo/controllers.h"

namespace coevo {

namespace {

// Open-loop UCT with a uniformly random opponent. Tree nodes are keyed by
// the acting player's action prefix, so every traversal re-simulates from
// the root and stochastic outcomes are resampled each visit.
class OlmctsController final : public Controller {
public:
    OlmctsController(std::string name, const HeuristicConfig& cfg, const ControllerParams& params)
        : name_(std::move(name)), cfg_(cfg), depth_max_(params.mcts_depth) {}

    const std::string& name() const override { return name_; }
    void reset(std::uint64_t seed) override { rng_ = RngStream(seed); }

    Action act(const GameState& state, int player, BudgetTracker& tracker) override {
        ForwardModel fm(tracker);
        nodes_.clear();
        nodes_.push_back(Node{});
        value_min_ = std::numeric_limits<double>::infinity();
        value_max_ = -std::numeric_limits<double>::infinity();

        std::array<Action, 4> root_acts{};
        const int n_root = legal_actions(state, player, root_acts);
        const int alphabet = state.variant.action_count();

        while (!tracker.expired()) {
            if (!run_iteration(state, player, root_acts, n_root, alphabet, fm)) break;
        }
        return recommend(root_acts, n_root, player, state);
    }

private:
    struct Node {
        int visits = 0;
        double value_sum = 0.0;
        std::array<int, 4> child{-1, -1, -1, -1};

        double mean() const { return value_sum / visits; }
    };

    // One tree walk: select down existing nodes, expand one child, finish
    // with a random rollout, backpropagate. False when the budget died.
    bool run_iteration(const GameState& root, int player, const std::array<Action, 4>& root_acts,
                       int n_root, int alphabet, ForwardModel& fm) {
        GameState sim = root;
        sim.rng = RngStream(rng_.next_u64());

        path_.clear();
        path_.push_back(0);
        int node = 0;
        int depth = 0;
        bool expanded = false;

        while (depth < depth_max_ && !sim.terminal() && !expanded) {
            const int n_moves = node == 0 ? n_root : alphabet;
            int pick = select_child(node, n_moves, expanded);
            const Action raw =
                node == 0 ? root_acts[static_cast<std::size_t>(pick)] : static_cast<Action>(pick);
            if (expanded) {
                nodes_[static_cast<std::size_t>(node)].child[pick] =
                    static_cast<int>(nodes_.size());
                nodes_.push_back(Node{});
            }
            node = nodes_[static_cast<std::size_t>(node)].child[pick];
            path_.push_back(node);

            const Action mine = coerce_legal(sim, player, raw);
            const Action theirs = rnd_act(sim, 1 - player, rng_);
            const Action a1 = player == 0 ? mine : theirs;
            const Action a2 = player == 0 ? theirs : mine;
            if (!fm.step(sim, a1, a2)) return false;
            ++depth;
        }

        // rollout to the depth cap
        while (depth < depth_max_ && !sim.terminal()) {
            const Action mine = rnd_act(sim, player, rng_);
            const Action theirs = rnd_act(sim, 1 - player, rng_);
            const Action a1 = player == 0 ? mine : theirs;
            const Action a2 = player == 0 ? theirs : mine;
            if (!fm.step(sim, a1, a2)) return false;
            ++depth;
        }

        const double value = evaluate_state(sim, cfg_).of(player);
        value_min_ = std::min(value_min_, value);
        value_max_ = std::max(value_max_, value);
        for (const int id : path_) {
            Node& n = nodes_[static_cast<std::size_t>(id)];
            n.visits += 1;
            n.value_sum += value;
        }
        return true;
    }

    // Picks a child index; prefers an unexpanded child (uniformly at random,
    // setting `expand`), otherwise UCB1 over min-max normalized means.
    int select_child(int node, int n_moves, bool& expand) {
        const Node& n = nodes_[static_cast<std::size_t>(node)];
        int fresh = 0;
        for (int i = 0; i < n_moves; ++i)
            if (n.child[i] < 0) ++fresh;
        if (fresh > 0) {
            expand = true;
            std::uint32_t skip = rng_.next_below(static_cast<std::uint32_t>(fresh));
            for (int i = 0; i < n_moves; ++i) {
                if (n.child[i] < 0 && skip-- == 0) return i;
            }
        }
        expand = false;
        int best = 0;
        double best_ucb = -std::numeric_limits<double>::infinity();
        for (int i = 0; i < n_moves; ++i) {
            const Node& c = nodes_[static_cast<std::size_t>(n.child[i])];
            double ucb;
            if (c.visits == 0) {
                ucb = std::numeric_limits<double>::infinity();
            } else {
                ucb = normalized(c.mean()) +
                      std::sqrt(2.0) * std::sqrt(std::log(n.visits + 1.0) / c.visits);
            }
            if (ucb > best_ucb) {
                best_ucb = ucb;
                best = i;
            }
        }
        return best;
    }

    double normalized(double v) const {
        if (value_max_ > value_min_)
            return (v - value_min_) / (value_max_ - value_min_);
        return 0.5;
    }

    // Robust child: most visits, then highest average fitness, then lowest
    // action index. Falls back to a random legal action when no iteration
    // finished.
    Action recommend(const std::array<Action, 4>& root_acts, int n_root, int player,
                     const GameState& state) {
        const Node& root = nodes_[0];
        int best = -1;
        for (int i = 0; i < n_root; ++i) {
            if (root.child[i] < 0) continue;
            const Node& c = nodes_[static_cast<std::size_t>(root.child[i])];
            if (c.visits == 0) continue;
            if (best < 0) {
                best = i;
                continue;
            }
            const Node& b = nodes_[static_cast<std::size_t>(root.child[best])];
            if (c.visits > b.visits || (c.visits == b.visits && c.mean() > b.mean())) best = i;
        }
        if (best < 0) return rnd_act(state, player, rng_);
        return root_acts[static_cast<std::size_t>(best)];
    }

    std::string name_;
    HeuristicConfig cfg_;
    int depth_max_;
    RngStream rng_;
    std::vector<Node> nodes_;
    std::vector<int> path_;
    double value_min_ = 0.0;
    double value_max_ = 0.0;
};

} // namespace

std::unique_ptr<Controller> make_olmcts(std::string name, const HeuristicConfig& cfg,
                                        const ControllerParams& params) {
    return std::make_unique<OlmctsController>(std::move(name), cfg, params);
}

} // namespace coevo
