#include "coevo/tournament.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace coevo {

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

MatchRecord play_match(Controller& c1, Controller& c2, const GameVariant& variant,
                       const ControllerBudget& budget, std::uint64_t seed, ReplayWriter* replay) {
    GameState s = new_game(variant, seed);
    const RngStream seed_stream(seed);
    c1.reset(seed_stream.child(101).key());
    c2.reset(seed_stream.child(102).key());

    MatchRecord rec;
    rec.controller1 = c1.name();
    rec.controller2 = c2.name();
    rec.seed = seed;

    if (replay != nullptr) replay->write_header(variant, seed);

    while (!s.terminal()) {
        BudgetTracker t1(budget), t2(budget);
        Action a1 = c1.act(s, 0, t1);
        Action a2 = c2.act(s, 1, t2);
        if (budget.mode == BudgetMode::ForwardCalls) {
            if (t1.calls() > budget.limit) ++rec.budget_violations;
            if (t2.calls() > budget.limit) ++rec.budget_violations;
        }
        // Controllers contract to return legal actions; fall back rather
        // than abort the match if one misbehaves.
        if (!is_legal(s, 0, a1)) {
            a1 = Action::RotateCW;
            ++rec.budget_violations;
        }
        if (!is_legal(s, 1, a2)) {
            a2 = Action::RotateCW;
            ++rec.budget_violations;
        }
        step(s, a1, a2);
        if (replay != nullptr) replay->write_tick(s, a1, a2);
    }

    if (replay != nullptr) replay->write_final(s);

    rec.winner = *s.winner;
    rec.ticks = s.tick;
    rec.points1 = nb_points(s.ships[0]);
    rec.points2 = nb_points(s.ships[1]);
    return rec;
}

double LeagueTable::row_average(int row) const {
    double sum = 0.0;
    int n = 0;
    for (std::size_t col = 0; col < names.size(); ++col) {
        if (static_cast<int>(col) == row) continue;
        sum += cell_value(row, static_cast<int>(col));
        ++n;
    }
    return n > 0 ? sum / n : 0.0;
}

namespace {

struct MatchTask {
    int row; // controller index seated as player 1
    int col; // controller index seated as player 2
    std::uint64_t seed;
    std::string replay_path;
};

} // namespace

LeagueTable run_league(const LeagueSpec& spec) {
    const int n = static_cast<int>(spec.controllers.size());
    LeagueTable table;
    table.names = spec.controllers;
    table.games_per_pair = spec.games_per_pair;
    table.cells.assign(static_cast<std::size_t>(n),
                       std::vector<LeagueCell>(static_cast<std::size_t>(n)));

    // Pre-derive every match before running anything: seeds and seats depend
    // only on (base_seed, pair, game), never on execution order.
    std::vector<MatchTask> tasks;
    const RngStream base(spec.base_seed);
    int pair_index = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++pair_index) {
            const RngStream pair_stream = base.child(static_cast<std::uint64_t>(pair_index));
            for (int g = 0; g < spec.games_per_pair; ++g) {
                MatchTask t;
                t.row = (g % 2 == 0) ? i : j; // alternate seats to cancel seat bias
                t.col = (g % 2 == 0) ? j : i;
                t.seed = pair_stream.child(static_cast<std::uint64_t>(g)).key();
                if (!spec.replay_dir.empty()) {
                    t.replay_path = spec.replay_dir + "/match_" + std::to_string(pair_index) +
                                    "_" + std::to_string(g) + ".replay";
                }
                tasks.push_back(std::move(t));
            }
        }
    }

    std::vector<MatchRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};

    const auto worker = [&]() {
        for (;;) {
            const std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const MatchTask& t = tasks[k];
            const auto c1 = make_controller(spec.controllers[static_cast<std::size_t>(t.row)],
                                            spec.heuristic);
            const auto c2 = make_controller(spec.controllers[static_cast<std::size_t>(t.col)],
                                            spec.heuristic);
            if (t.replay_path.empty()) {
                records[k] = play_match(*c1, *c2, spec.variant, spec.budget, t.seed);
            } else {
                std::ofstream out(t.replay_path);
                ReplayWriter writer(out);
                records[k] = play_match(*c1, *c2, spec.variant, spec.budget, t.seed, &writer);
            }
        }
    };

    int threads = spec.threads;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min<int>(threads, static_cast<int>(tasks.size()) > 0
                                         ? static_cast<int>(tasks.size())
                                         : 1);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    // Canonical-order fold: identical output for any interleaving above.
    for (std::size_t k = 0; k < tasks.size(); ++k) {
        const MatchTask& t = tasks[k];
        const MatchRecord& r = records[k];
        if (r.winner == Winner::Player1) {
            table.cells[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)].points +=
                1.0;
            table.cells[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)]
                .win_ticks.push_back(r.ticks);
        } else if (r.winner == Winner::Player2) {
            table.cells[static_cast<std::size_t>(t.col)][static_cast<std::size_t>(t.row)].points +=
                1.0;
            table.cells[static_cast<std::size_t>(t.col)][static_cast<std::size_t>(t.row)]
                .win_ticks.push_back(r.ticks);
        } else {
            table.cells[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)].points +=
                0.5;
            table.cells[static_cast<std::size_t>(t.col)][static_cast<std::size_t>(t.row)].points +=
                0.5;
        }
    }
    table.records = std::move(records);
    return table;
}

TickStats tick_stats(const std::vector<int>& ticks) {
    TickStats st;
    st.n = static_cast<int>(ticks.size());
    if (st.n == 0) return st;
    double sum = 0.0;
    for (const int t : ticks) sum += t;
    st.mean = sum / st.n;
    if (st.n < 2) return st;
    double ss = 0.0;
    for (const int t : ticks) ss += (t - st.mean) * (t - st.mean);
    const double sample_sd = std::sqrt(ss / (st.n - 1));
    st.stderr_ = sample_sd / std::sqrt(static_cast<double>(st.n - 1));
    return st;
}

std::string league_text_table(const LeagueTable& table) {
    const int n = static_cast<int>(table.names.size());
    std::ostringstream out;

    std::size_t w = 8;
    for (const std::string& name : table.names) w = std::max(w, name.size() + 2);

    const auto pad = [&](const std::string& s) {
        std::string p = s;
        while (p.size() < w) p += ' ';
        return p;
    };

    out << pad("");
    for (const std::string& name : table.names) out << pad(name);
    out << pad("Avg.") << '\n';

    for (int r = 0; r < n; ++r) {
        out << pad(table.names[static_cast<std::size_t>(r)]);
        for (int c = 0; c < n; ++c) {
            if (r == c) {
                out << pad("-");
                continue;
            }
            const LeagueCell& cell = table.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            const TickStats st = tick_stats(cell.win_ticks);
            std::string v = fmt_g9(table.cell_value(r, c));
            if (st.n > 0)
                v += " (" + fmt_g9(std::round(st.mean)) + "\xC2\xB1" +
                     fmt_g9(std::round(st.stderr_)) + ")";
            out << pad(v);
        }
        out << pad(fmt_g9(table.row_average(r))) << '\n';
    }
    return out.str();
}

std::string league_csv(const LeagueTable& table, const std::vector<std::string>& config_echo) {
    std::ostringstream out;
    for (const std::string& line : config_echo) out << "# " << line << '\n';
    out << "row_controller,col_controller,games,row_points,col_points,row_winrate,"
           "decided_mean_ticks,decided_stderr_ticks\n";
    const int n = static_cast<int>(table.names.size());
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            if (r == c) continue;
            const LeagueCell& cell = table.cells[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            const LeagueCell& mirror = table.cells[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
            const TickStats st = tick_stats(cell.win_ticks);
            out << table.names[static_cast<std::size_t>(r)] << ','
                << table.names[static_cast<std::size_t>(c)] << ',' << table.games_per_pair << ','
                << fmt_g9(cell.points) << ',' << fmt_g9(mirror.points) << ','
                << fmt_g9(table.cell_value(r, c));
            if (st.n > 0)
                out << ',' << fmt_g9(st.mean) << ',' << fmt_g9(st.stderr_);
            else
                out << ",,";
            out << '\n';
        }
    }
    return out.str();
}

std::string match_records_csv(const LeagueTable& table) {
    std::ostringstream out;
    out << "controller1,controller2,seed,winner,ticks,points1,points2,budget_violations\n";
    for (const MatchRecord& r : table.records) {
        const char* w = r.winner == Winner::Player1 ? "1"
                        : r.winner == Winner::Player2 ? "2"
                                                      : "draw";
        out << r.controller1 << ',' << r.controller2 << ',' << r.seed << ',' << w << ','
            << r.ticks << ',' << fmt_g9(r.points1) << ',' << fmt_g9(r.points2) << ','
            << r.budget_violations << '\n';
    }
    return out.str();
}

} // namespace coevo
