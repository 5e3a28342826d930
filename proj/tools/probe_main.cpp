// Scratch diagnostics for controller decisions from handmade states.
#include <cstdio>
#include <map>
#include <string>

#include "coevo/controllers.h"

using namespace coevo;

int main(int argc, char** argv) {
    const double dist = argc > 1 ? std::atof(argv[1]) : 120.0;
    GameState s = new_game(GameVariant::make(VariantId::G1), 1);
    // attacker (player 0) sits `dist` units behind player 1, both heading +x
    s.ships[0].pos = {320.0 - dist, 240.0};
    s.ships[1].pos = {320.0, 240.0};
    s.ships[0].heading = {1.0, 0.0};
    s.ships[1].heading = {1.0, 0.0};
    s.ships[0].vel = {0.0, 0.0};
    s.ships[1].vel = {0.0, 0.0};

    HeuristicConfig cfg;
    for (const char* name : {"rhga", "rhca", "olmcts"}) {
        std::map<std::string, int> hist;
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            auto c = make_controller(name, cfg);
            c->reset(seed * 7919 + 13);
            BudgetTracker tracker({BudgetMode::ForwardCalls, 2000});
            const Action a = c->act(s, 0, tracker);
            hist[action_name(a)]++;
        }
        std::printf("%-8s d=%5.0f:", name, dist);
        for (const auto& [k, v] : hist) std::printf("  %s=%d", k.c_str(), v);
        std::printf("\n");
    }
    return 0;
}
