#include "coevo/config.h"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

namespace coevo {

namespace {

ControllerBudget parse_budget(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos)
        throw ConfigError("budget must be ms=N or calls=N, got: " + text);
    const std::string kind = text.substr(0, eq);
    long limit = 0;
    try {
        limit = std::stol(text.substr(eq + 1));
    } catch (const std::exception&) {
        throw ConfigError("bad budget limit in: " + text);
    }
    if (limit <= 0) throw ConfigError("budget limit must be positive, got: " + text);
    if (kind == "ms") return {BudgetMode::WallClockMs, limit};
    if (kind == "calls") return {BudgetMode::ForwardCalls, limit};
    throw ConfigError("budget must be ms=N or calls=N, got: " + text);
}

std::string budget_text(const ControllerBudget& b) {
    return (b.mode == BudgetMode::WallClockMs ? "ms=" : "calls=") + std::to_string(b.limit);
}

int default_threads() {
    if (const char* env = std::getenv("COEVO_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return 0; // run_league falls back to hardware concurrency
}

void validate(RunConfig& cfg) {
    if (cfg.heuristic == HeuristicMode::PointsOnly && cfg.variant == VariantId::G1)
        throw ConfigError("the points heuristic needs a weapon variant; g1 has no points");
    if (!cfg.positional_win && cfg.variant == VariantId::G1)
        throw ConfigError("g1 has no end condition without the positional win");
    if (cfg.games <= 0) throw ConfigError("games must be positive");
    if (cfg.max_ticks < 1) throw ConfigError("max-ticks must be at least 1");

    const HeuristicConfig h = cfg.heuristic_config();
    const auto check_controller = [&](const std::string& spec) {
        try {
            make_controller(spec, h);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    };
    if (cfg.command == Command::Match) {
        check_controller(cfg.p1);
        check_controller(cfg.p2);
    } else if (cfg.command == Command::League) {
        if (cfg.controllers.size() < 2)
            throw ConfigError("a league needs at least 2 controllers");
        for (const std::string& c : cfg.controllers) check_controller(c);
    } else if (cfg.replay_file.empty()) {
        throw ConfigError("verify needs a replay file");
    }
}

} // namespace

HeuristicConfig RunConfig::heuristic_config() const {
    HeuristicConfig h;
    h.mode = heuristic;
    h.dot_mode = dot_mode;
    return h;
}

GameVariant RunConfig::game_variant() const {
    GameVariant v = GameVariant::make(variant);
    v.max_ticks = max_ticks;
    if (variant != VariantId::G1) v.positional_win = positional_win;
    return v;
}

LeagueSpec RunConfig::league_spec() const {
    LeagueSpec spec;
    spec.controllers = controllers;
    spec.variant = game_variant();
    spec.heuristic = heuristic_config();
    spec.budget = budget;
    spec.games_per_pair = games;
    spec.base_seed = seed;
    spec.threads = threads;
    spec.replay_dir = replay_dir;
    return spec;
}

std::vector<std::string> RunConfig::echo_key_values() const {
    std::vector<std::string> out;
    const char* cmd = command == Command::Match ? "match"
                      : command == Command::League ? "league"
                                                   : "verify";
    out.push_back(std::string("command=") + cmd);
    out.push_back("game=" + variant_name(variant));
    out.push_back(std::string("heuristic=") +
                  (heuristic == HeuristicMode::Full ? "full" : "points"));
    out.push_back(std::string("dot-mode=") + (dot_mode == DistDotMode::Pursuit ? "pursuit"
                                              : dot_mode == DistDotMode::Literal ? "literal"
                                                                                 : "facing"));
    if (command == Command::Match) {
        out.push_back("p1=" + p1);
        out.push_back("p2=" + p2);
    }
    if (command == Command::League) {
        std::string list;
        for (std::size_t i = 0; i < controllers.size(); ++i) {
            if (i > 0) list += ',';
            list += controllers[i];
        }
        out.push_back("controllers=" + list);
    }
    out.push_back("games=" + std::to_string(games));
    out.push_back("budget=" + budget_text(budget));
    out.push_back("seed=" + std::to_string(seed));
    out.push_back("max-ticks=" + std::to_string(max_ticks));
    out.push_back(std::string("positional-win=") + (positional_win ? "on" : "off"));
    return out;
}

RunConfig parse_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    cfg.threads = default_threads();

    CLI::App app{"two-player battle-game planning testbed"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    app.set_config("--config");

    std::string game = "g1";
    std::string heuristic = "full";
    std::string dot_mode = "pursuit";
    std::string budget = "ms=10";
    std::string positional = "on";
    std::string controllers_list;

    app.add_option("--game", game, "game variant: g1, g2, g3, g3nr")
        ->check(CLI::IsMember({"g1", "g2", "g3", "g3nr"}));
    app.add_option("--heuristic", heuristic, "state evaluation: full or points")
        ->check(CLI::IsMember({"full", "points"}));
    app.add_option("--dot-mode", dot_mode, "DistScore dot reading")
        ->check(CLI::IsMember({"pursuit", "literal", "facing"}));
    app.add_option("--p1", cfg.p1, "player 1 controller spec");
    app.add_option("--p2", cfg.p2, "player 2 controller spec");
    app.add_option("--controllers", controllers_list, "comma-separated league roster");
    app.add_option("--games", cfg.games, "games per pairing");
    app.add_option("--budget", budget, "per-decision budget: ms=N or calls=N");
    app.add_option("--seed", cfg.seed, "base seed");
    app.add_option("--max-ticks", cfg.max_ticks, "game length cap");
    app.add_option("--positional-win", positional, "winning-range end condition in g2/g3")
        ->check(CLI::IsMember({"on", "off"}));
    app.add_option("--out", cfg.out_path, "output path (replay for match, csv for league)");
    app.add_option("--replay-dir", cfg.replay_dir, "directory for per-match replays");
    app.add_option("--match-log", cfg.match_log, "per-match record csv (league)");
    app.add_option("--threads", cfg.threads, "match parallelism (default COEVO_THREADS)");

    CLI::App* match = app.add_subcommand("match", "play one game");
    CLI::App* league = app.add_subcommand("league", "run a round-robin league");
    CLI::App* verify = app.add_subcommand("verify", "re-simulate and check a replay log");
    verify->add_option("replay", cfg.replay_file, "replay log to verify");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    if (league->parsed()) cfg.command = Command::League;
    else if (verify->parsed()) cfg.command = Command::Verify;
    else if (match->parsed()) cfg.command = Command::Match;
    else throw ConfigError("expected a subcommand: match, league or verify");

    cfg.variant = variant_from_name(game);
    cfg.heuristic = heuristic == "full" ? HeuristicMode::Full : HeuristicMode::PointsOnly;
    cfg.dot_mode = dot_mode == "pursuit" ? DistDotMode::Pursuit
                   : dot_mode == "literal" ? DistDotMode::Literal
                                           : DistDotMode::Facing;
    cfg.budget = parse_budget(budget);
    cfg.positional_win = positional == "on";

    cfg.controllers.clear();
    std::string cur;
    for (const char c : controllers_list) {
        if (c == ',') {
            if (!cur.empty()) cfg.controllers.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) cfg.controllers.push_back(cur);

    validate(cfg);
    return cfg;
}

namespace {

int cmd_match(const RunConfig& cfg) {
    const HeuristicConfig h = cfg.heuristic_config();
    const auto c1 = make_controller(cfg.p1, h);
    const auto c2 = make_controller(cfg.p2, h);

    MatchRecord rec;
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "cannot open " << cfg.out_path << "\n";
            return 1;
        }
        ReplayWriter writer(out);
        rec = play_match(*c1, *c2, cfg.game_variant(), cfg.budget, cfg.seed, &writer);
    } else {
        rec = play_match(*c1, *c2, cfg.game_variant(), cfg.budget, cfg.seed);
    }

    const char* w = rec.winner == Winner::Player1 ? rec.controller1.c_str()
                    : rec.winner == Winner::Player2 ? rec.controller2.c_str()
                                                    : "draw";
    std::cout << rec.controller1 << " vs " << rec.controller2 << ": " << w << " after "
              << rec.ticks << " ticks, points " << fmt_g9(rec.points1) << " / "
              << fmt_g9(rec.points2) << "\n";
    if (!cfg.out_path.empty()) std::cout << "replay written to " << cfg.out_path << "\n";
    return 0;
}

int cmd_league(const RunConfig& cfg) {
    const LeagueTable table = run_league(cfg.league_spec());
    std::cout << league_text_table(table);

    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "cannot open " << cfg.out_path << "\n";
            return 1;
        }
        out << league_csv(table, cfg.echo_key_values());
        if (!out) {
            std::cerr << "write failed: " << cfg.out_path << "\n";
            return 1;
        }
    }
    if (!cfg.match_log.empty()) {
        std::ofstream out(cfg.match_log);
        if (!out) {
            std::cerr << "cannot open " << cfg.match_log << "\n";
            return 1;
        }
        out << match_records_csv(table);
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const ReplayVerifyResult r = verify_replay_file(cfg.replay_file);
    if (!r.ok) {
        std::cerr << "replay verification failed at line " << r.first_divergent_line << ": "
                  << r.message << "\n";
        return 1;
    }
    std::cout << "replay verified: " << r.ticks << " ticks, " << r.rng_draws_after_init
              << " rng draws after initialization\n";
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    switch (cfg.command) {
    case Command::Match: return cmd_match(cfg);
    case Command::League: return cmd_league(cfg);
    case Command::Verify: return cmd_verify(cfg);
    }
    return 2;
}

} // namespace coevo
