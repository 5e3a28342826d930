#pragma once

#include <iosfwd>
#include <string>

#include "coevo/game.h"

namespace coevo {

// Line-oriented replay log.
//   header:   variant,seed,width,height,max_ticks,positional_win
//   per tick: tick,a1,a2,x1,y1,h1,x2,y2,h2,lives1,lives2,points1,points2,nmissiles
//   final:    winner,<1|2|draw>,ticks,<n>
// Headings are logged as angles; floats carry 9 significant digits, enough
// to compare a re-simulation line for line.
class ReplayWriter {
public:
    explicit ReplayWriter(std::ostream& out) : out_(out) {}

    void write_header(const GameVariant& variant, std::uint64_t seed);
    void write_tick(const GameState& after, Action a1, Action a2);
    void write_final(const GameState& terminal);

private:
    std::ostream& out_;
};

// State line exactly as the writer emits it (shared with the verifier).
std::string format_tick_line(const GameState& after, Action a1, Action a2);

struct ReplayVerifyResult {
    bool ok = false;
    int first_divergent_line = 0; // 1-based line number in the log, 0 if none
    std::string message;
    std::uint64_t rng_draws_after_init = 0;
    int ticks = 0;
};

// Re-simulates the logged actions from the header seed and checks every line
// matches bit-exactly at the logged precision.
ReplayVerifyResult verify_replay(std::istream& in);
ReplayVerifyResult verify_replay_file(const std::string& path);

} // namespace coevo
