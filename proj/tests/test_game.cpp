#include <doctest.h>

#include <algorithm>
#include <random>

#include "spectro/game.hpp"
#include "support/test_systems.hpp"

using namespace spectro;

TEST_CASE("stuck positions decide immediately") {
    ReachabilityGame game;
    int lonely_defender = game.add_position(true);
    int lonely_attacker = game.add_position(false);

    WinningRegion region = compute_winning_region(game);
    CHECK(region.attacker_wins(lonely_defender));
    CHECK_FALSE(region.attacker_wins(lonely_attacker));
}

TEST_CASE("the defender wins infinite plays") {
    ReachabilityGame game;
    int first = game.add_position(false);
    int second = game.add_position(true);
    game.add_move(first, second);
    game.add_move(second, first);

    WinningRegion region = compute_winning_region(game);
    CHECK_FALSE(region.attacker_wins(first));
    CHECK_FALSE(region.attacker_wins(second));
}

TEST_CASE("attacker escape from a cycle") {
    ReachabilityGame game;
    int loop_a = game.add_position(false);
    int loop_b = game.add_position(false);
    int trap = game.add_position(true);  // stuck defender
    game.add_move(loop_a, loop_b);
    game.add_move(loop_b, loop_a);
    game.add_move(loop_b, trap);

    WinningRegion region = compute_winning_region(game);
    CHECK(region.attacker_wins(loop_a));
    CHECK(region.attacker_wins(loop_b));
    CHECK(region.attacker_wins(trap));
}

TEST_CASE("agreement with the naive fixed point on random games") {
    std::mt19937 rng(53);
    for (int round = 0; round < 200; ++round) {
        ReachabilityGame game = testing::random_game(rng);
        WinningRegion region = compute_winning_region(game);
        std::vector<bool> expected = testing::naive_attacker_region(game);
        for (std::size_t g = 0; g < game.position_count(); ++g)
            REQUIRE(region.attacker_win[g] == expected[g]);
        // each move decrements its defender-option counter at most once
        CHECK(region.decrement_ops <= game.move_count());
    }
}

TEST_CASE("tsv dump has two header lines plus one line per item") {
    ReachabilityGame game;
    game.add_position(false);
    game.add_position(true);
    game.add_move(0, 1, 0);
    game.add_move(1, 0, 1);
    game.add_move(1, 1);

    GameDumpLabels labels;
    labels.position = [](int g) { return "p" + std::to_string(g); };
    labels.move = [](int l) { return l == 0 ? "x" : "y"; };

    std::string tsv = dump_tsv(game, labels);
    std::size_t lines = std::count(tsv.begin(), tsv.end(), '\n');
    CHECK(lines == 2 + game.position_count() + game.move_count());
    CHECK(tsv.find("0\tatt\tp0") != std::string::npos);
    CHECK(tsv.find("1\tdef\tp1") != std::string::npos);
    CHECK(tsv.find("0 -> 1 [x]") != std::string::npos);
    CHECK(tsv.find("1 -> 1\n") != std::string::npos);  // unlabeled move
}

TEST_CASE("dot dump draws defenders as ellipses and colors regions") {
    ReachabilityGame game;
    game.add_position(true);  // stuck defender, attacker-won
    GameDumpLabels labels;
    labels.position = [](int) { return std::string("d"); };
    labels.move = [](int) { return std::string(); };
    WinningRegion region = compute_winning_region(game);

    std::string dot = dump_dot(game, labels, &region);
    CHECK(dot.find("shape=ellipse") != std::string::npos);
    CHECK(dot.find("color=black") != std::string::npos);
}
