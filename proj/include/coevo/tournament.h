#pragma once

#include <string>
#include <vector>

#include "coevo/controllers.h"
#include "coevo/replay.h"

namespace coevo {

struct MatchRecord {
    std::string controller1;
    std::string controller2;
    std::uint64_t seed = 0;
    Winner winner = Winner::Draw;
    int ticks = 0;
    double points1 = 0.0;
    double points2 = 0.0;
    int budget_violations = 0;
};

// Plays one full game. Both controllers see the full state each tick but not
// the opponent's pending move; the joint step is applied simultaneously.
// Deterministic given the seed under a forward-call budget.
MatchRecord play_match(Controller& c1, Controller& c2, const GameVariant& variant,
                       const ControllerBudget& budget, std::uint64_t seed,
                       ReplayWriter* replay = nullptr);

struct LeagueSpec {
    std::vector<std::string> controllers;
    GameVariant variant;
    HeuristicConfig heuristic;
    ControllerBudget budget;
    int games_per_pair = 100;
    std::uint64_t base_seed = 1;
    int threads = 0;            // <= 0: hardware concurrency
    std::string replay_dir;     // when set, one replay log per match
};

// One ordered cell of the league: points the row controller took off the
// column controller, and the tick counts of the row controller's wins.
struct LeagueCell {
    double points = 0.0;
    std::vector<int> win_ticks;
};

struct TickStats {
    int n = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
};

TickStats tick_stats(const std::vector<int>& ticks);

struct LeagueTable {
    std::vector<std::string> names;
    int games_per_pair = 0;
    std::vector<std::vector<LeagueCell>> cells; // [row][col], diagonal unused
    std::vector<MatchRecord> records;           // canonical (pair, game) order

    // Percentage points of the row controller against one opponent.
    double cell_value(int row, int col) const {
        return 100.0 * cells[row][col].points / games_per_pair;
    }
    // Shaded "Avg." column: mean of the row over all opponents.
    double row_average(int row) const;
};

// Full round-robin league: games_per_pair matches per unordered pair, seats
// alternating each game, seeds derived from (base_seed, pair, game index).
// Matches may run in parallel; aggregation order is fixed, so the table and
// records are identical for any thread count.
LeagueTable run_league(const LeagueSpec& spec);

// Aligned text table in the row-beats-column orientation.
std::string league_text_table(const LeagueTable& table);

// CSV: `# key=value` config echo lines, a header row, then one line per
// ordered pair:
// row_controller,col_controller,games,row_points,col_points,row_winrate,
// decided_mean_ticks,decided_stderr_ticks
std::string league_csv(const LeagueTable& table, const std::vector<std::string>& config_echo);

// Line-delimited match records for post-hoc analysis.
std::string match_records_csv(const LeagueTable& table);

// %.9g, the float format used across all emitted tables.
std::string fmt_g9(double v);

} // namespace coevo
