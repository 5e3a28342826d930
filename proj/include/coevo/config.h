#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "coevo/tournament.h"

namespace coevo {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command : std::uint8_t { Match, League, Verify };

struct RunConfig {
    Command command = Command::Match;
    VariantId variant = VariantId::G1;
    HeuristicMode heuristic = HeuristicMode::Full;
    DistDotMode dot_mode = DistDotMode::Pursuit;
    std::string p1 = "rnd";
    std::string p2 = "rnd";
    std::vector<std::string> controllers; // league roster
    int games = 100;
    ControllerBudget budget{BudgetMode::WallClockMs, 10};
    std::uint64_t seed = 1;
    int max_ticks = kDefaultMaxTicks;
    bool positional_win = true;
    std::string out_path;
    std::string replay_dir;
    std::string match_log;
    std::string replay_file; // verify input
    int threads = 0;         // 0: COEVO_THREADS or hardware concurrency

    HeuristicConfig heuristic_config() const;
    GameVariant game_variant() const;
    LeagueSpec league_spec() const;

    // Flat key=value form, re-parseable through the config-file grammar.
    std::vector<std::string> echo_key_values() const;
};

// Parses command-line style arguments (subcommand first) into a validated
// RunConfig. Throws ConfigError with a diagnostic on any invalid input.
RunConfig parse_config(const std::vector<std::string>& args);

// Full entry point: parse, dispatch, report. Returns the process exit code.
int run_cli(int argc, const char* const* argv);

} // namespace coevo
