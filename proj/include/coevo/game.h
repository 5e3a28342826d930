#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "coevo/rng.h"
#include "coevo/vec2.h"

namespace coevo {

// Arena and physics constants shared by every variant.
inline constexpr double kArenaWidth = 640.0;
inline constexpr double kArenaHeight = 480.0;
inline constexpr double kShipMaxSpeed = 3.0;
inline constexpr double kMissileSpeed = 4.0;
inline constexpr int kMissileLifetime = 100;
inline constexpr double kTurnRate = 2.0 * 3.14159265358979323846 / 60.0;
inline constexpr double kFriction = 0.99;
inline constexpr double kThrustAccel = 0.3;
inline constexpr double kHitRadius = 12.0; // ship radius 10 + missile radius 2
inline constexpr double kExplosionMaxShift = 20.0;
inline constexpr double kWinRange = 100.0;
inline constexpr double kWinCos = 0.95;
inline constexpr int kDefaultMaxTicks = 2000;
inline constexpr int kStartLives = 3;

enum class VariantId : std::uint8_t { G1, G2, G3, G3NR };

struct GameVariant {
    VariantId id = VariantId::G1;
    bool weapons_enabled = false;
    int cooldown_ticks = 0;
    bool recoil_enabled = false;
    bool explosion_enabled = false;
    int max_ticks = kDefaultMaxTicks;
    int lives = kStartLives;
    // Positional (winning-range) end condition stays active in the weapon
    // variants by default; always active in G1.
    bool positional_win = true;

    static GameVariant make(VariantId id);
    int action_count() const { return weapons_enabled ? 4 : 3; }
};

VariantId variant_from_name(const std::string& name);
std::string variant_name(VariantId id);

enum class Action : std::uint8_t { RotateCW = 0, RotateCCW = 1, Thrust = 2, Fire = 3 };

const char* action_name(Action a);
std::optional<Action> action_from_name(const std::string& name);

struct Ship {
    Vec2 pos;
    Vec2 vel;
    Vec2 heading{1.0, 0.0};
    int lives = kStartLives;
    int missiles_fired = 0; // nb_m
    int hits_scored = 0;    // nb_k
    int cooldown_remaining = 0;

    friend bool operator==(const Ship&, const Ship&) = default;
};

struct Missile {
    Vec2 pos;
    Vec2 vel;
    std::uint8_t owner = 0; // player index 0 or 1
    std::int16_t ticks_remaining = 0;

    friend bool operator==(const Missile&, const Missile&) = default;
};

// Each player can have at most kMissileLifetime + 1 missiles in flight.
inline constexpr int kMaxMissiles = 2 * (kMissileLifetime + 1);

// Fixed-capacity missile list; copies only live elements so G1 states stay
// cheap to clone in rollouts.
class MissileList {
public:
    MissileList() = default;
    MissileList(const MissileList& o) : size_(o.size_) {
        for (int i = 0; i < size_; ++i) items_[i] = o.items_[i];
    }
    MissileList& operator=(const MissileList& o) {
        size_ = o.size_;
        for (int i = 0; i < size_; ++i) items_[i] = o.items_[i];
        return *this;
    }

    int size() const { return size_; }
    bool empty() const { return size_ == 0; }
    Missile& operator[](int i) { return items_[i]; }
    const Missile& operator[](int i) const { return items_[i]; }
    Missile* begin() { return items_.data(); }
    Missile* end() { return items_.data() + size_; }
    const Missile* begin() const { return items_.data(); }
    const Missile* end() const { return items_.data() + size_; }

    void push_back(const Missile& m) { items_[size_++] = m; }
    void remove_at(int i) { items_[i] = items_[--size_]; } // order not preserved past i

    friend bool operator==(const MissileList& a, const MissileList& b) {
        if (a.size_ != b.size_) return false;
        for (int i = 0; i < a.size_; ++i)
            if (!(a.items_[i] == b.items_[i])) return false;
        return true;
    }

private:
    std::array<Missile, kMaxMissiles> items_;
    int size_ = 0;
};

enum class Winner : std::uint8_t { Player1 = 1, Player2 = 2, Draw = 3 };

struct GameState {
    GameVariant variant;
    int tick = 0;
    std::array<Ship, 2> ships;
    MissileList missiles;
    std::optional<Winner> winner;
    RngStream rng;

    bool terminal() const { return winner.has_value(); }

    friend bool operator==(const GameState&, const GameState&) = default;
};

// Starts a fresh game: ships back to back at a random angle and offset from
// the arena center, at rest, tick 0. The state's rng stream is keyed by seed.
GameState new_game(const GameVariant& variant, std::uint64_t seed);

// Legal moves for one player. Throws std::logic_error on a terminal state.
// Order is fixed: CW, CCW, Thrust, then Fire when available.
int legal_actions(const GameState& state, int player, std::array<Action, 4>& out);
bool is_legal(const GameState& state, int player, Action a);

// Advances the state one simultaneous tick in place.
// Throws std::logic_error on a terminal state or an illegal action.
void step(GameState& state, Action a1, Action a2);

// Functional form of step.
GameState advance(const GameState& state, Action a1, Action a2);

// End-of-game test on the current fields; does not mutate.
std::optional<Winner> check_end(const GameState& state);

// True iff `attacker` is within kWinRange of the opponent, behind it, and
// facing it (all on the torus). Coincident positions yield false.
bool in_winning_range(const GameState& state, int attacker);

// Toroidal displacement from ship `from` to ship `to`.
Vec2 torus_offset(Vec2 from, Vec2 to);
double torus_distance(Vec2 a, Vec2 b);

// nbPoints = 10 * hits - missiles fired.
inline double nb_points(const Ship& ship) {
    return 10.0 * ship.hits_scored - ship.missiles_fired;
}

// Digest over every game field, for determinism checks.
std::uint64_t state_digest(const GameState& state);

} // namespace coevo
