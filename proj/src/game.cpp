#include "coevo/game.h"

#include <cmath>
#include <cstring>
#include <stdexcept>

namespace coevo {

GameVariant GameVariant::make(VariantId id) {
    GameVariant v;
    v.id = id;
    switch (id) {
    case VariantId::G1:
        v.weapons_enabled = false;
        v.cooldown_ticks = 0;
        v.recoil_enabled = false;
        v.explosion_enabled = false;
        break;
    case VariantId::G2:
        v.weapons_enabled = true;
        v.cooldown_ticks = 0;
        v.recoil_enabled = true;
        v.explosion_enabled = true;
        break;
    case VariantId::G3:
        v.weapons_enabled = true;
        v.cooldown_ticks = 4;
        v.recoil_enabled = true;
        v.explosion_enabled = true;
        break;
    case VariantId::G3NR:
        v.weapons_enabled = true;
        v.cooldown_ticks = 4;
        v.recoil_enabled = false;
        v.explosion_enabled = false;
        break;
    }
    return v;
}

VariantId variant_from_name(const std::string& name) {
    if (name == "g1") return VariantId::G1;
    if (name == "g2") return VariantId::G2;
    if (name == "g3") return VariantId::G3;
    if (name == "g3nr") return VariantId::G3NR;
    throw std::invalid_argument("unknown game variant: " + name);
}

std::string variant_name(VariantId id) {
    switch (id) {
    case VariantId::G1: return "g1";
    case VariantId::G2: return "g2";
    case VariantId::G3: return "g3";
    case VariantId::G3NR: return "g3nr";
    }
    return "?";
}

const char* action_name(Action a) {
    switch (a) {
    case Action::RotateCW: return "cw";
    case Action::RotateCCW: return "ccw";
    case Action::Thrust: return "thrust";
    case Action::Fire: return "fire";
    }
    return "?";
}

std::optional<Action> action_from_name(const std::string& name) {
    if (name == "cw") return Action::RotateCW;
    if (name == "ccw") return Action::RotateCCW;
    if (name == "thrust") return Action::Thrust;
    if (name == "fire") return Action::Fire;
    return std::nullopt;
}

Vec2 torus_offset(Vec2 from, Vec2 to) {
    return {torus_delta(from.x, to.x, kArenaWidth), torus_delta(from.y, to.y, kArenaHeight)};
}

double torus_distance(Vec2 a, Vec2 b) {
    return torus_offset(a, b).norm();
}

GameState new_game(const GameVariant& variant, std::uint64_t seed) {
    GameState s;
    s.variant = variant;
    s.rng = RngStream(seed);

    const double angle = s.rng.next_range(0.0, 2.0 * 3.14159265358979323846);
    const double offset = s.rng.next_range(50.0, 150.0);
    const Vec2 u = Vec2::from_angle(angle);
    const Vec2 center{kArenaWidth / 2.0, kArenaHeight / 2.0};

    for (int i = 0; i < 2; ++i) {
        Ship& ship = s.ships[i];
        const double side = (i == 0) ? 1.0 : -1.0;
        ship.pos = {torus_wrap(center.x + side * offset * u.x, kArenaWidth),
                    torus_wrap(center.y + side * offset * u.y, kArenaHeight)};
        ship.heading = u * side;
        ship.vel = {0.0, 0.0};
        ship.lives = variant.lives;
        ship.missiles_fired = 0;
        ship.hits_scored = 0;
        ship.cooldown_remaining = 0;
    }
    return s;
}

int legal_actions(const GameState& state, int player, std::array<Action, 4>& out) {
    if (state.terminal()) throw std::logic_error("legal_actions on terminal state");
    out[0] = Action::RotateCW;
    out[1] = Action::RotateCCW;
    out[2] = Action::Thrust;
    int n = 3;
    if (state.variant.weapons_enabled && state.ships[player].cooldown_remaining == 0)
        out[n++] = Action::Fire;
    return n;
}

bool is_legal(const GameState& state, int player, Action a) {
    if (a != Action::Fire) return true;
    return state.variant.weapons_enabled && state.ships[player].cooldown_remaining == 0;
}

bool in_winning_range(const GameState& state, int attacker) {
    const Ship& att = state.ships[attacker];
    const Ship& opp = state.ships[1 - attacker];
    const Vec2 offset = torus_offset(att.pos, opp.pos);
    const double d2 = offset.norm2();
    if (d2 > kWinRange * kWinRange) return false;
    if (d2 < 1e-18) return false; // coincident: no line of sight
    const double d = std::sqrt(d2);
    const Vec2 u{offset.x / d, offset.y / d}; // unit vector attacker -> opponent
    // Behind: opponent heading points away from the attacker.
    if (u.dot(opp.heading) < kWinCos) return false;
    // Facing: attacker heading points at the opponent.
    if (u.dot(att.heading) < kWinCos) return false;
    return true;
}

std::optional<Winner> check_end(const GameState& state) {
    if (state.variant.weapons_enabled) {
        const bool dead1 = state.ships[0].lives == 0;
        const bool dead2 = state.ships[1].lives == 0;
        if (dead1 && dead2) return Winner::Draw;
        if (dead1) return Winner::Player2;
        if (dead2) return Winner::Player1;
    }
    if (state.variant.positional_win || state.variant.id == VariantId::G1) {
        const bool w1 = in_winning_range(state, 0);
        const bool w2 = in_winning_range(state, 1);
        if (w1 && w2) return Winner::Draw;
        if (w1) return Winner::Player1;
        if (w2) return Winner::Player2;
    }
    if (state.tick >= state.variant.max_ticks) {
        if (state.variant.weapons_enabled) {
            const double p1 = nb_points(state.ships[0]);
            const double p2 = nb_points(state.ships[1]);
            if (p1 > p2) return Winner::Player1;
            if (p2 > p1) return Winner::Player2;
        }
        return Winner::Draw;
    }
    return std::nullopt;
}

namespace {

void cap_speed(Vec2& vel, double cap) {
    const double n2 = vel.norm2();
    if (n2 > cap * cap) vel *= cap / std::sqrt(n2);
}

} // namespace

void step(GameState& s, Action a1, Action a2) {
    if (s.terminal()) throw std::logic_error("step on terminal state");
    if (!is_legal(s, 0, a1) || !is_legal(s, 1, a2))
        throw std::logic_error("illegal action in step");

    const std::array<Action, 2> acts{a1, a2};
    std::array<bool, 2> fired{false, false};

    // (1) rotations
    for (int i = 0; i < 2; ++i) {
        if (acts[i] == Action::RotateCW)
            s.ships[i].heading = s.ships[i].heading.rotated(-kTurnRate);
        else if (acts[i] == Action::RotateCCW)
            s.ships[i].heading = s.ships[i].heading.rotated(kTurnRate);
    }

    // (2) friction, thrust, speed cap
    for (int i = 0; i < 2; ++i) {
        Ship& ship = s.ships[i];
        ship.vel *= kFriction;
        if (acts[i] == Action::Thrust) ship.vel += ship.heading * kThrustAccel;
        cap_speed(ship.vel, kShipMaxSpeed);
    }

    // (3) missile launches
    for (int i = 0; i < 2; ++i) {
        if (acts[i] != Action::Fire) continue;
        Ship& ship = s.ships[i];
        Missile m;
        m.pos = ship.pos;
        m.vel = ship.heading * kMissileSpeed;
        m.owner = static_cast<std::uint8_t>(i);
        // +1 absorbs this tick's lifetime decrement: the missile leaves the
        // fire tick showing kMissileLifetime and expires 100 ticks later.
        m.ticks_remaining = static_cast<std::int16_t>(kMissileLifetime + 1);
        s.missiles.push_back(m);
        ship.missiles_fired += 1;
        if (s.variant.recoil_enabled) {
            const double kick = 1.0 + s.rng.next_range(0.0, 0.5);
            ship.vel += ship.heading * -kick;
            cap_speed(ship.vel, kShipMaxSpeed);
        }
        fired[i] = true;
        ship.cooldown_remaining = s.variant.cooldown_ticks;
    }

    // (4) integration with toroidal wrap
    for (int i = 0; i < 2; ++i) {
        Ship& ship = s.ships[i];
        ship.pos = {torus_wrap(ship.pos.x + ship.vel.x, kArenaWidth),
                    torus_wrap(ship.pos.y + ship.vel.y, kArenaHeight)};
    }
    for (Missile& m : s.missiles) {
        m.pos = {torus_wrap(m.pos.x + m.vel.x, kArenaWidth),
                 torus_wrap(m.pos.y + m.vel.y, kArenaHeight)};
    }

    // (5) missile-ship collisions, opponent-owned missiles only
    for (int i = 0; i < s.missiles.size();) {
        const Missile& m = s.missiles[i];
        const int victim = 1 - m.owner;
        Ship& hit = s.ships[victim];
        if (torus_distance(m.pos, hit.pos) <= kHitRadius) {
            if (hit.lives > 0) hit.lives -= 1;
            s.ships[m.owner].hits_scored += 1;
            if (s.variant.explosion_enabled) {
                const double shift_angle = s.rng.next_range(0.0, 2.0 * 3.14159265358979323846);
                const double shift_mag = s.rng.next_range(0.0, kExplosionMaxShift);
                const Vec2 shift = Vec2::from_angle(shift_angle) * shift_mag;
                hit.pos = {torus_wrap(hit.pos.x + shift.x, kArenaWidth),
                           torus_wrap(hit.pos.y + shift.y, kArenaHeight)};
                hit.heading = Vec2::from_angle(s.rng.next_range(0.0, 2.0 * 3.14159265358979323846));
                hit.vel = {0.0, 0.0};
            }
            s.missiles.remove_at(i);
        } else {
            ++i;
        }
    }

    // (6) lifetimes and cooldowns
    for (int i = 0; i < s.missiles.size();) {
        if (--s.missiles[i].ticks_remaining == 0)
            s.missiles.remove_at(i);
        else
            ++i;
    }
    for (int i = 0; i < 2; ++i) {
        // Skip the ship that fired this tick: a fire at tick t becomes legal
        // again at t + cooldown_ticks + 1.
        if (!fired[i] && s.ships[i].cooldown_remaining > 0)
            s.ships[i].cooldown_remaining -= 1;
    }

    // (7) clock, (8) end conditions
    s.tick += 1;
    s.winner = check_end(s);
}

GameState advance(const GameState& state, Action a1, Action a2) {
    GameState next = state;
    step(next, a1, a2);
    return next;
}

namespace {

std::uint64_t fnv1a(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

template <typename T>
std::uint64_t fnv1a_value(std::uint64_t h, const T& v) {
    return fnv1a(h, &v, sizeof(v));
}

} // namespace

std::uint64_t state_digest(const GameState& s) {
    std::uint64_t h = 1469598103934665603ULL;
    h = fnv1a_value(h, s.tick);
    for (const Ship& ship : s.ships) {
        h = fnv1a_value(h, ship.pos);
        h = fnv1a_value(h, ship.vel);
        h = fnv1a_value(h, ship.heading);
        h = fnv1a_value(h, ship.lives);
        h = fnv1a_value(h, ship.missiles_fired);
        h = fnv1a_value(h, ship.hits_scored);
        h = fnv1a_value(h, ship.cooldown_remaining);
    }
    for (const Missile& m : s.missiles) {
        h = fnv1a_value(h, m.pos);
        h = fnv1a_value(h, m.vel);
        h = fnv1a_value(h, m.owner);
        h = fnv1a_value(h, m.ticks_remaining);
    }
    const std::uint8_t w = s.winner ? static_cast<std::uint8_t>(*s.winner) : 0;
    h = fnv1a_value(h, w);
    h = fnv1a_value(h, s.rng.draws());
    return h;
}

} // namespace coevo
