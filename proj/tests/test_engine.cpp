#include <doctest.h>

#include <cmath>
#include <set>

#include "coevo/game.h"

using namespace coevo;

namespace {

GameState fresh(VariantId id, std::uint64_t seed = 42) {
    return new_game(GameVariant::make(id), seed);
}

// Drives a game with seeded-random legal joint actions.
void random_playout(GameState& s, RngStream& rng, int max_steps) {
    std::array<Action, 4> acts{};
    for (int i = 0; i < max_steps && !s.terminal(); ++i) {
        const int n1 = legal_actions(s, 0, acts);
        const Action a1 = acts[rng.next_below(n1)];
        const int n2 = legal_actions(s, 1, acts);
        const Action a2 = acts[rng.next_below(n2)];
        step(s, a1, a2);
    }
}

} // namespace

TEST_CASE("variant presets") {
    const GameVariant g1 = GameVariant::make(VariantId::G1);
    CHECK_FALSE(g1.weapons_enabled);
    const GameVariant g2 = GameVariant::make(VariantId::G2);
    CHECK(g2.weapons_enabled);
    CHECK(g2.cooldown_ticks == 0);
    CHECK(g2.recoil_enabled);
    const GameVariant g3 = GameVariant::make(VariantId::G3);
    CHECK(g3.cooldown_ticks == 4);
    const GameVariant g3nr = GameVariant::make(VariantId::G3NR);
    CHECK(g3nr.cooldown_ticks == 4);
    CHECK_FALSE(g3nr.recoil_enabled);
    CHECK_FALSE(g3nr.explosion_enabled);
    CHECK(g3.max_ticks == 2000);
    CHECK(g3.lives == 3);
}

TEST_CASE("new_game places ships back to back and symmetric") {
    for (std::uint64_t seed : {42ULL, 7ULL, 123456789ULL}) {
        const GameState s = fresh(VariantId::G1, seed);
        CHECK(s.tick == 0);
        CHECK(s.missiles.size() == 0);
        CHECK_FALSE(s.terminal());
        // positions sum to twice the arena center (no wrap at spawn offsets)
        CHECK(s.ships[0].pos.x + s.ships[1].pos.x == doctest::Approx(kArenaWidth).epsilon(1e-12));
        CHECK(s.ships[0].pos.y + s.ships[1].pos.y == doctest::Approx(kArenaHeight).epsilon(1e-12));
        // exactly opposite headings
        CHECK(s.ships[0].heading.x == doctest::Approx(-s.ships[1].heading.x));
        CHECK(s.ships[0].heading.y == doctest::Approx(-s.ships[1].heading.y));
        // back to back: each ship heads away from its opponent
        const Vec2 to_opp = torus_offset(s.ships[0].pos, s.ships[1].pos);
        CHECK(s.ships[0].heading.dot(to_opp) < 0.0);
        // spawn distance within [100, 300]
        const double d = torus_distance(s.ships[0].pos, s.ships[1].pos);
        CHECK(d >= 100.0 - 1e-9);
        CHECK(d <= 300.0 + 1e-9);
        // at rest
        CHECK(s.ships[0].vel == Vec2{0.0, 0.0});
        CHECK(s.ships[1].vel == Vec2{0.0, 0.0});
    }
}

TEST_CASE("new_game per-variant initialization") {
    const GameState g3 = fresh(VariantId::G3, 9);
    CHECK(g3.ships[0].lives == 3);
    CHECK(g3.ships[1].lives == 3);
    CHECK(g3.ships[0].cooldown_remaining == 0);
    CHECK(g3.ships[1].cooldown_remaining == 0);
}

TEST_CASE("new_game is deterministic") {
    const GameState a = fresh(VariantId::G1, 77);
    const GameState b = fresh(VariantId::G1, 77);
    CHECK(a == b);
    CHECK(state_digest(a) == state_digest(b));
}

TEST_CASE("legal_actions per variant") {
    std::array<Action, 4> acts{};
    GameState g1 = fresh(VariantId::G1);
    CHECK(legal_actions(g1, 0, acts) == 3);

    GameState g2 = fresh(VariantId::G2);
    CHECK(legal_actions(g2, 0, acts) == 4);
    CHECK(acts[3] == Action::Fire);

    GameState g3 = fresh(VariantId::G3);
    g3.ships[0].cooldown_remaining = 2;
    CHECK(legal_actions(g3, 0, acts) == 3);
    CHECK(legal_actions(g3, 1, acts) == 4);

    g1.winner = Winner::Draw;
    CHECK_THROWS_AS(legal_actions(g1, 0, acts), std::logic_error);
}

TEST_CASE("step rejects terminal states and illegal actions") {
    GameState s = fresh(VariantId::G1);
    CHECK_THROWS_AS(step(s, Action::Fire, Action::Thrust), std::logic_error); // no weapons
    s.winner = Winner::Player1;
    CHECK_THROWS_AS(step(s, Action::Thrust, Action::Thrust), std::logic_error);

    GameState g3 = fresh(VariantId::G3);
    g3.ships[1].cooldown_remaining = 3;
    CHECK_THROWS_AS(step(g3, Action::Thrust, Action::Fire), std::logic_error);
}

TEST_CASE("symmetric thrust gives equal speeds under the cap") {
    GameState s = fresh(VariantId::G1, 5);
    step(s, Action::Thrust, Action::Thrust);
    const double v1 = s.ships[0].vel.norm();
    const double v2 = s.ships[1].vel.norm();
    CHECK(v1 == doctest::Approx(v2));
    CHECK(v1 <= kShipMaxSpeed + 1e-12);
    CHECK(v1 > 0.0);
}

TEST_CASE("thrust approaches the speed cap and friction decays it") {
    GameState s = fresh(VariantId::G1, 5);
    for (int i = 0; i < 40; ++i) step(s, Action::Thrust, Action::RotateCW);
    CHECK(s.ships[0].vel.norm() == doctest::Approx(kShipMaxSpeed));
    const double v_before = s.ships[0].vel.norm();
    step(s, Action::RotateCW, Action::RotateCW);
    CHECK(s.ships[0].vel.norm() == doctest::Approx(v_before * kFriction));
}

TEST_CASE("fire spawns a missile with full lifetime") {
    GameState s = fresh(VariantId::G2, 11);
    const int fired_before = s.ships[0].missiles_fired;
    step(s, Action::Fire, Action::RotateCW);
    CHECK(s.ships[0].missiles_fired == fired_before + 1);
    REQUIRE(s.missiles.size() == 1);
    CHECK(s.missiles[0].owner == 0);
    CHECK(s.missiles[0].ticks_remaining == kMissileLifetime);
    CHECK(s.missiles[0].vel.norm() == doctest::Approx(kMissileSpeed));
}

TEST_CASE("missile disappears when its lifetime runs out") {
    GameState s = fresh(VariantId::G3NR, 13);
    step(s, Action::Fire, Action::RotateCW);
    REQUIRE(s.missiles.size() == 1);
    // expire it: the missile wraps the torus without meeting the rotating opponent
    int steps = 0;
    while (s.missiles.size() == 1) {
        CHECK(s.missiles[0].ticks_remaining >= 1);
        step(s, Action::RotateCCW, Action::RotateCW);
        ++steps;
    }
    CHECK(steps == kMissileLifetime);
    CHECK(s.ships[1].lives == 3); // no hit happened
}

TEST_CASE("recoil pushes the firing ship backwards") {
    GameState s = fresh(VariantId::G3, 21);
    const Vec2 heading = s.ships[0].heading;
    step(s, Action::Fire, Action::RotateCW);
    CHECK(s.ships[0].vel.dot(heading) < 0.0);
    CHECK(s.ships[0].vel.norm() <= kShipMaxSpeed + 1e-12);

    GameState nr = fresh(VariantId::G3NR, 21);
    step(nr, Action::Fire, Action::RotateCW);
    CHECK(nr.ships[0].vel == Vec2{0.0, 0.0});
}

TEST_CASE("cooldown gates fire: shot at t, next legal shot at t+5") {
    GameState s = fresh(VariantId::G3, 3);
    REQUIRE(is_legal(s, 0, Action::Fire));
    const int fire_tick = s.tick;
    step(s, Action::Fire, Action::RotateCW);
    CHECK(s.ships[0].cooldown_remaining == 4);
    int legal_again = -1;
    for (int i = 0; i < 10 && legal_again < 0; ++i) {
        if (is_legal(s, 0, Action::Fire)) legal_again = s.tick;
        else step(s, Action::RotateCW, Action::RotateCW);
    }
    CHECK(legal_again == fire_tick + 5);
}

TEST_CASE("g2 has no cooldown: fire every tick") {
    GameState s = fresh(VariantId::G2, 3);
    for (int i = 0; i < 5; ++i) {
        REQUIRE(is_legal(s, 0, Action::Fire));
        step(s, Action::Fire, Action::RotateCW);
    }
    CHECK(s.ships[0].missiles_fired == 5);
}

TEST_CASE("advance is deterministic on copies") {
    GameState a = fresh(VariantId::G3, 31);
    GameState b = a;
    RngStream rng(99);
    std::array<Action, 4> acts{};
    for (int i = 0; i < 300 && !a.terminal(); ++i) {
        const int n1 = legal_actions(a, 0, acts);
        const Action a1 = acts[rng.next_below(n1)];
        const int n2 = legal_actions(a, 1, acts);
        const Action a2 = acts[rng.next_below(n2)];
        step(a, a1, a2);
        step(b, a1, a2);
        REQUIRE(a == b);
    }
    CHECK(state_digest(a) == state_digest(b));
}

TEST_CASE("in_winning_range geometry") {
    GameState s = fresh(VariantId::G1, 1);
    // attacker 50 units directly behind the opponent, both heading +x
    s.ships[0].pos = {200.0, 200.0};
    s.ships[1].pos = {250.0, 200.0};
    s.ships[0].heading = {1.0, 0.0};
    s.ships[1].heading = {1.0, 0.0};
    CHECK(in_winning_range(s, 0));
    CHECK_FALSE(in_winning_range(s, 1));

    // 150 units behind: distance violated
    s.ships[1].pos = {350.0, 200.0};
    CHECK_FALSE(in_winning_range(s, 0));

    // 50 units in front of the opponent, facing it: behind-ness violated
    s.ships[0].pos = {300.0, 200.0};
    s.ships[1].pos = {250.0, 200.0};
    s.ships[0].heading = {-1.0, 0.0};
    s.ships[1].heading = {1.0, 0.0};
    CHECK_FALSE(in_winning_range(s, 0));

    // coincident ships: degenerate, no win
    s.ships[0].pos = s.ships[1].pos;
    CHECK_FALSE(in_winning_range(s, 0));
}

TEST_CASE("winning range works across the torus seam") {
    GameState s = fresh(VariantId::G1, 1);
    s.ships[0].pos = {630.0, 200.0};
    s.ships[1].pos = {40.0, 200.0}; // 50 units ahead across the seam
    s.ships[0].heading = {1.0, 0.0};
    s.ships[1].heading = {1.0, 0.0};
    CHECK(in_winning_range(s, 0));
}

TEST_CASE("check_end end conditions") {
    SUBCASE("lives decide weapon games") {
        GameState s = fresh(VariantId::G2, 2);
        s.ships[0].lives = 0;
        CHECK(check_end(s) == Winner::Player2);
        s.ships[1].lives = 0;
        CHECK(check_end(s) == Winner::Draw);
    }
    SUBCASE("timeout goes to the higher score") {
        GameState s = fresh(VariantId::G2, 2);
        s.tick = s.variant.max_ticks;
        s.ships[0].hits_scored = 2;
        s.ships[0].missiles_fired = 5; // 15 points
        s.ships[1].hits_scored = 1;
        s.ships[1].missiles_fired = 2; // 8 points
        CHECK(check_end(s) == Winner::Player1);
        s.ships[1].hits_scored = 2;
        s.ships[1].missiles_fired = 5;
        CHECK(check_end(s) == Winner::Draw);
    }
    SUBCASE("g1 timeout with nobody in range is a draw") {
        GameState s = fresh(VariantId::G1, 2);
        s.tick = s.variant.max_ticks;
        CHECK(check_end(s) == Winner::Draw);
    }
    SUBCASE("positional win applies in weapon games unless disabled") {
        GameVariant v = GameVariant::make(VariantId::G3);
        GameState s = new_game(v, 4);
        s.ships[0].pos = {200.0, 200.0};
        s.ships[1].pos = {250.0, 200.0};
        s.ships[0].heading = {1.0, 0.0};
        s.ships[1].heading = {1.0, 0.0};
        CHECK(check_end(s) == Winner::Player1);
        v.positional_win = false;
        GameState off = s;
        off.variant = v;
        CHECK(check_end(off) == std::nullopt);
    }
}

TEST_CASE("fuzz: speed caps, toroidal closure, missile lifetimes, conservation") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        for (VariantId id : {VariantId::G2, VariantId::G3, VariantId::G3NR}) {
            GameState s = fresh(id, seed);
            RngStream rng(seed * 977 + 5);
            std::array<Action, 4> acts{};
            int removed_by_hit = 0;
            int last_missiles = 0;
            int spawned = 0;
            for (int t = 0; t < 600 && !s.terminal(); ++t) {
                const int hits_before = s.ships[0].hits_scored + s.ships[1].hits_scored;
                const int n1 = legal_actions(s, 0, acts);
                const Action a1 = acts[rng.next_below(n1)];
                const int n2 = legal_actions(s, 1, acts);
                const Action a2 = acts[rng.next_below(n2)];
                step(s, a1, a2);

                for (int p = 0; p < 2; ++p) {
                    const Ship& ship = s.ships[p];
                    CHECK(ship.vel.norm() <= kShipMaxSpeed + 1e-9);
                    CHECK(ship.pos.x >= 0.0);
                    CHECK(ship.pos.x < kArenaWidth);
                    CHECK(ship.pos.y >= 0.0);
                    CHECK(ship.pos.y < kArenaHeight);
                    CHECK(ship.heading.norm() == doctest::Approx(1.0).epsilon(1e-9));
                    CHECK(ship.cooldown_remaining <= s.variant.cooldown_ticks);
                    CHECK(ship.lives >= 0);
                }
                for (int m = 0; m < s.missiles.size(); ++m) {
                    CHECK(s.missiles[m].vel.norm() <= kMissileSpeed + 1e-9);
                    CHECK(s.missiles[m].ticks_remaining >= 1);
                    CHECK(s.missiles[m].ticks_remaining <= kMissileLifetime);
                    CHECK(s.missiles[m].pos.x >= 0.0);
                    CHECK(s.missiles[m].pos.x < kArenaWidth);
                }
                const int hits_now = s.ships[0].hits_scored + s.ships[1].hits_scored;
                removed_by_hit += hits_now - hits_before;
                (void)last_missiles;
                last_missiles = s.missiles.size();
                spawned = s.ships[0].missiles_fired + s.ships[1].missiles_fired;
            }
            // conservation: every spawned missile is in flight, expired or hit
            const int in_flight = s.missiles.size();
            const int expired = spawned - in_flight - removed_by_hit;
            CHECK(expired >= 0);
            CHECK(spawned == in_flight + removed_by_hit + expired);
            CHECK(s.ships[0].hits_scored + s.ships[1].hits_scored == removed_by_hit);
        }
    }
}

TEST_CASE("player symmetry: mirrored seats yield mirrored games") {
    // Mirror trick: swap seats and actions; in variants with no asymmetric
    // randomness the trajectories must swap exactly.
    for (VariantId id : {VariantId::G1, VariantId::G3NR}) {
        const GameVariant v = GameVariant::make(id);
        GameState a = new_game(v, 17);
        GameState b = a;
        std::swap(b.ships[0], b.ships[1]);

        RngStream rng(4242);
        std::array<Action, 4> acts{};
        for (int t = 0; t < 200 && !a.terminal() && !b.terminal(); ++t) {
            const int n1 = legal_actions(a, 0, acts);
            const Action a1 = acts[rng.next_below(n1)];
            const int n2 = legal_actions(a, 1, acts);
            const Action a2 = acts[rng.next_below(n2)];
            step(a, a1, a2);
            step(b, a2, a1);
            REQUIRE(a.ships[0].pos == b.ships[1].pos);
            REQUIRE(a.ships[1].pos == b.ships[0].pos);
            REQUIRE(a.ships[0].vel == b.ships[1].vel);
            REQUIRE(a.ships[0].lives == b.ships[1].lives);
            if (a.terminal() || b.terminal()) {
                REQUIRE(a.terminal() == b.terminal());
                if (a.winner == Winner::Draw) REQUIRE(b.winner == Winner::Draw);
                else if (a.winner == Winner::Player1) REQUIRE(b.winner == Winner::Player2);
                else REQUIRE(b.winner == Winner::Player1);
            }
        }
    }
}

TEST_CASE("engine rng draws happen only for recoil and explosions") {
    // G3NR: deterministic once started; the stream only moves at new_game.
    GameState s = fresh(VariantId::G3NR, 8);
    const std::uint64_t draws_at_start = s.rng.draws();
    RngStream rng(1);
    random_playout(s, rng, 500);
    CHECK(s.rng.draws() == draws_at_start);

    // G3: each fire consumes exactly one draw when no hit lands
    GameState g3 = fresh(VariantId::G3, 8);
    const std::uint64_t before = g3.rng.draws();
    step(g3, Action::Fire, Action::RotateCW);
    CHECK(g3.rng.draws() == before + 1);
}
