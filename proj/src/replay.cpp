#include "coevo/replay.h"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace coevo {

namespace {

std::string fmt_g9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const char* winner_token(Winner w) {
    switch (w) {
    case Winner::Player1: return "1";
    case Winner::Player2: return "2";
    case Winner::Draw: return "draw";
    }
    return "?";
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (const char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

ReplayVerifyResult fail(int line_no, std::string message) {
    ReplayVerifyResult r;
    r.ok = false;
    r.first_divergent_line = line_no;
    r.message = std::move(message);
    return r;
}

} // namespace

std::string format_tick_line(const GameState& s, Action a1, Action a2) {
    std::string line;
    line.reserve(160);
    line += std::to_string(s.tick);
    line += ',';
    line += action_name(a1);
    line += ',';
    line += action_name(a2);
    for (const Ship& ship : s.ships) {
        line += ',';
        line += fmt_g9(ship.pos.x);
        line += ',';
        line += fmt_g9(ship.pos.y);
        line += ',';
        line += fmt_g9(ship.heading.angle());
    }
    line += ',';
    line += std::to_string(s.ships[0].lives);
    line += ',';
    line += std::to_string(s.ships[1].lives);
    line += ',';
    line += fmt_g9(nb_points(s.ships[0]));
    line += ',';
    line += fmt_g9(nb_points(s.ships[1]));
    line += ',';
    line += std::to_string(s.missiles.size());
    return line;
}

void ReplayWriter::write_header(const GameVariant& variant, std::uint64_t seed) {
    out_ << variant_name(variant.id) << ',' << seed << ',' << fmt_g9(kArenaWidth) << ','
         << fmt_g9(kArenaHeight) << ',' << variant.max_ticks << ','
         << (variant.positional_win ? "on" : "off") << '\n';
}

void ReplayWriter::write_tick(const GameState& after, Action a1, Action a2) {
    out_ << format_tick_line(after, a1, a2) << '\n';
}

void ReplayWriter::write_final(const GameState& terminal) {
    out_ << "winner," << winner_token(*terminal.winner) << ",ticks," << terminal.tick << '\n';
}

ReplayVerifyResult verify_replay(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) return fail(1, "empty replay");

    const auto header = split_csv(line);
    if (header.size() != 6) return fail(1, "malformed header");

    GameVariant variant;
    std::uint64_t seed = 0;
    try {
        variant = GameVariant::make(variant_from_name(header[0]));
        seed = std::stoull(header[1]);
        variant.max_ticks = std::stoi(header[4]);
    } catch (const std::exception& e) {
        return fail(1, std::string("bad header: ") + e.what());
    }
    if (header[2] != fmt_g9(kArenaWidth) || header[3] != fmt_g9(kArenaHeight))
        return fail(1, "arena size mismatch");
    if (header[5] == "on") variant.positional_win = true;
    else if (header[5] == "off") variant.positional_win = false;
    else return fail(1, "bad positional_win flag");

    GameState s = new_game(variant, seed);
    const std::uint64_t init_draws = s.rng.draws();

    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.rfind("winner,", 0) == 0) {
            const auto fields = split_csv(line);
            if (fields.size() != 4 || fields[2] != "ticks")
                return fail(line_no, "malformed final line");
            if (!s.terminal())
                return fail(line_no, "log ended before the game did");
            if (fields[1] != winner_token(*s.winner))
                return fail(line_no, "winner mismatch: log says " + fields[1]);
            if (fields[3] != std::to_string(s.tick))
                return fail(line_no, "tick count mismatch: log says " + fields[3]);
            ReplayVerifyResult r;
            r.ok = true;
            r.rng_draws_after_init = s.rng.draws() - init_draws;
            r.ticks = s.tick;
            return r;
        }

        const auto fields = split_csv(line);
        if (fields.size() != 14) return fail(line_no, "malformed tick line");
        const auto a1 = action_from_name(fields[1]);
        const auto a2 = action_from_name(fields[2]);
        if (!a1 || !a2) return fail(line_no, "unknown action token");
        if (s.terminal()) return fail(line_no, "actions past the end of the game");
        if (!is_legal(s, 0, *a1) || !is_legal(s, 1, *a2))
            return fail(line_no, "illegal action at tick " + std::to_string(s.tick));

        step(s, *a1, *a2);
        const std::string expect = format_tick_line(s, *a1, *a2);
        if (line != expect)
            return fail(line_no, "state diverged at tick " + std::to_string(s.tick) +
                                     "\n  log: " + line + "\n  sim: " + expect);
    }
    return fail(line_no + 1, "missing final line");
}

ReplayVerifyResult verify_replay_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) return fail(0, "cannot open " + path);
    return verify_replay(in);
}

} // namespace coevo
