#include "coevo/controllers.h"

#include <stdexcept>

namespace coevo {

Action rnd_act(const GameState& state, int player, RngStream& rng) {
    std::array<Action, 4> acts{};
    const int n = legal_actions(state, player, acts);
    return acts[rng.next_below(static_cast<std::uint32_t>(n))];
}

Action rot_act() {
    return Action::RotateCW;
}

Action ras_act(const GameState& state, int player) {
    return is_legal(state, player, Action::Fire) ? Action::Fire : Action::RotateCW;
}

namespace {

class RndController final : public Controller {
public:
    explicit RndController(std::string name) : name_(std::move(name)) {}
    const std::string& name() const override { return name_; }
    void reset(std::uint64_t seed) override { rng_ = RngStream(seed); }
    Action act(const GameState& state, int player, BudgetTracker&) override {
        return rnd_act(state, player, rng_);
    }

private:
    std::string name_;
    RngStream rng_;
};

class RotController final : public Controller {
public:
    explicit RotController(std::string name) : name_(std::move(name)) {}
    const std::string& name() const override { return name_; }
    void reset(std::uint64_t) override {}
    Action act(const GameState&, int, BudgetTracker&) override { return rot_act(); }

private:
    std::string name_;
};

class RasController final : public Controller {
public:
    explicit RasController(std::string name) : name_(std::move(name)) {}
    const std::string& name() const override { return name_; }
    void reset(std::uint64_t) override {}
    Action act(const GameState& state, int player, BudgetTracker&) override {
        return ras_act(state, player);
    }

private:
    std::string name_;
};

class OneStepController final : public Controller {
public:
    OneStepController(std::string name, const HeuristicConfig& cfg, OneStepPolicy policy)
        : name_(std::move(name)), cfg_(cfg), policy_(policy) {}
    const std::string& name() const override { return name_; }
    void reset(std::uint64_t) override {}
    Action act(const GameState& state, int player, BudgetTracker& tracker) override {
        ForwardModel fm(tracker);
        const PayoffMatrix mat = one_step_matrix(state, cfg_, &fm);
        const int n_self = player == 0 ? mat.rows : mat.cols;
        const int n_opp = player == 0 ? mat.cols : mat.rows;
        if (tracker.calls() < static_cast<long>(n_self) * n_opp)
            return Action::RotateCW; // budget died before the matrix was filled
        const int row = one_step_choose_row(mat, policy_, player == 0);
        return player == 0 ? mat.row_actions[static_cast<std::size_t>(row)]
                           : mat.col_actions[static_cast<std::size_t>(row)];
    }

private:
    std::string name_;
    HeuristicConfig cfg_;
    OneStepPolicy policy_;
};

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos) return {s, ""};
    return {s.substr(0, pos), s.substr(pos + 1)};
}

ControllerParams parse_params(const std::string& base, const std::string& arg_list) {
    ControllerParams p;
    std::string rest = arg_list;
    while (!rest.empty()) {
        auto [token, tail] = split_once(rest, ',');
        rest = tail;
        if (token.empty()) continue;
        auto [key, value] = split_once(token, '=');
        if (value.empty()) {
            // bare token: shorthand for onestep's policy
            if (base == "onestep") {
                const auto pol = one_step_policy_from_name(key);
                if (!pol) throw std::invalid_argument("unknown one-step policy: " + key);
                p.policy = *pol;
                continue;
            }
            throw std::invalid_argument("malformed controller parameter: " + token);
        }
        try {
            if (key == "lambda") p.lambda = std::stoi(value);
            else if (key == "probamut") p.proba_mut = std::stod(value);
            else if (key == "th") p.t_h = std::stoi(value);
            else if (key == "to") p.t_o = std::stoi(value);
            else if (key == "subpop") p.sub_pop_size = std::stoi(value);
            else if (key == "depth") p.mcts_depth = std::stoi(value);
            else if (key == "policy") {
                const auto pol = one_step_policy_from_name(value);
                if (!pol) throw std::invalid_argument("unknown one-step policy: " + value);
                p.policy = *pol;
            } else {
                throw std::invalid_argument("unknown controller parameter: " + key);
            }
        } catch (const std::invalid_argument&) {
            throw;
        } catch (const std::exception&) {
            throw std::invalid_argument("bad value for controller parameter " + key + ": " + value);
        }
    }
    if (p.lambda <= 2) throw std::invalid_argument("lambda must be > 2");
    if (p.proba_mut < 0.0 || p.proba_mut > 1.0)
        throw std::invalid_argument("probamut must be in [0, 1]");
    if (p.t_h < 1 || p.t_o < 1 || p.sub_pop_size < 1 || p.mcts_depth < 1)
        throw std::invalid_argument("controller parameters must be positive");
    return p;
}

} // namespace

std::unique_ptr<Controller> make_rnd(std::string name) {
    return std::make_unique<RndController>(std::move(name));
}

std::unique_ptr<Controller> make_rot(std::string name) {
    return std::make_unique<RotController>(std::move(name));
}

std::unique_ptr<Controller> make_ras(std::string name) {
    return std::make_unique<RasController>(std::move(name));
}

std::unique_ptr<Controller> make_onestep(std::string name, const HeuristicConfig& cfg,
                                         OneStepPolicy policy) {
    return std::make_unique<OneStepController>(std::move(name), cfg, policy);
}

std::unique_ptr<Controller> make_controller(const std::string& spec, const HeuristicConfig& cfg) {
    const auto [base, args] = split_once(spec, ':');
    if (base == "rnd") {
        if (!args.empty()) throw std::invalid_argument("rnd takes no parameters");
        return make_rnd(spec);
    }
    if (base == "rot") {
        if (!args.empty()) throw std::invalid_argument("rot takes no parameters");
        return make_rot(spec);
    }
    if (base == "ras") {
        if (!args.empty()) throw std::invalid_argument("ras takes no parameters");
        return make_ras(spec);
    }
    const ControllerParams params = parse_params(base, args);
    if (base == "onestep") return make_onestep(spec, cfg, params.policy);
    if (base == "olmcts") return make_olmcts(spec, cfg, params);
    if (base == "rhga") return make_rhga(spec, cfg, params);
    if (base == "rhca") return make_rhca(spec, cfg, params);
    throw std::invalid_argument("unknown controller: " + base);
}

std::vector<std::string> registered_controller_names() {
    return {"rnd", "rot", "ras", "onestep", "olmcts", "rhga", "rhca"};
}

} // namespace coevo
