#include <doctest.h>

#include <random>

#include "spectro/hml.hpp"
#include "spectro/hml_game.hpp"
#include "support/test_systems.hpp"

using namespace spectro;

namespace {

const Action a{"a"}, b{"b"}, d{"d"};

}  // namespace

TEST_CASE("implicit conjunction wraps negations only") {
    Formula neg = Formula::neg(Formula::obs(d));
    Formula wrapped = with_implicit_conjunction(neg);
    REQUIRE(wrapped.kind() == Formula::Kind::conjunction);
    REQUIRE(wrapped.conjuncts().size() == 1);
    CHECK(wrapped.conjuncts()[0] == neg);

    Formula obs = Formula::obs(a);
    CHECK(with_implicit_conjunction(obs) == obs);
    CHECK(with_implicit_conjunction(Formula::top()) == Formula::top());

    // idempotent: the wrapper is a conjunction, not a negation
    CHECK(with_implicit_conjunction(wrapped) == wrapped);
}

TEST_CASE("formula printing") {
    CHECK(Formula::top().to_string() == "T");
    CHECK(Formula::obs(a).to_string() == "<a>");
    CHECK(Formula::obs(a, Formula::neg(Formula::obs(d))).to_string() == "<a>!<d>");
    Formula conj = Formula::conj({Formula::obs(b), Formula::neg(Formula::obs(a))});
    CHECK(conj.to_string() == "/\\{<b>, !<a>}");
    // one-element conjunctions print as their only conjunct
    CHECK(with_implicit_conjunction(Formula::neg(Formula::obs(d))).to_string() ==
          "!<d>");
}

TEST_CASE("formula parser round-trips the report syntax") {
    for (const char* text :
         {"T", "<a>", "<a>!<d>", "/\\{<b>, !<a>}", "<a>/\\{<b>, <c>}",
          "!<a><a>", "<a>/\\{<b>!<b>, !<a>}"}) {
        Formula f = parse_formula(text);
        CHECK(f.to_string() == text);
    }
    CHECK(parse_formula("/\\{}") == Formula::top());
    CHECK(parse_formula(" <a> T ") == Formula::obs(a));
    CHECK_THROWS_AS(parse_formula("<a"), ParseError);
    CHECK_THROWS_AS(parse_formula("/\\{<a>,"), ParseError);
    CHECK_THROWS_AS(parse_formula("<A>"), ParseError);
}

TEST_CASE("conjunctions are flattened sets") {
    Formula inner = Formula::conj({Formula::obs(a), Formula::obs(b)});
    Formula outer = Formula::conj({inner, Formula::neg(Formula::obs(a))});
    for (const Formula& c : outer.conjuncts())
        CHECK(c.kind() != Formula::Kind::conjunction);
    CHECK(outer.conjuncts().size() == 3);

    // duplicates collapse; order is irrelevant
    CHECK(Formula::conj({Formula::obs(a), Formula::obs(a)}) == Formula::obs(a));
    CHECK(Formula::conj({Formula::obs(a), Formula::obs(b)}) ==
          Formula::conj({Formula::obs(b), Formula::obs(a)}));
}

TEST_CASE("satisfies on the introduction example") {
    Lts lts = testing::lts_of(testing::machines_p1_p2, {"P1", "P2"});
    StateId p1 = *lts.root("P1");
    StateId p2 = *lts.root("P2");
    Formula probe = parse_formula("<a>!<d>");

    CHECK(satisfies(lts, p1, probe));
    CHECK_FALSE(satisfies(lts, p2, probe));
    CHECK(satisfies(lts, p1, Formula::top()));
    CHECK(satisfies(lts, p2, Formula::top()));
}

TEST_CASE("satisfies respects the boolean structure") {
    std::mt19937 rng(23);
    for (int round = 0; round < 60; ++round) {
        Lts lts = testing::random_lts(rng);
        std::vector<Action> alphabet = lts.alphabet();
        if (alphabet.empty()) alphabet.push_back(a);
        Formula f = testing::random_formula(rng, alphabet);
        Formula g = testing::random_formula(rng, alphabet);
        for (StateId s = 0; s < static_cast<StateId>(lts.state_count()); ++s) {
            CHECK(satisfies(lts, s, Formula::neg(f)) == !satisfies(lts, s, f));
            CHECK(satisfies(lts, s, Formula::conj({f, g})) ==
                  (satisfies(lts, s, f) && satisfies(lts, s, g)));
        }
    }
}

TEST_CASE("hml game: stuck positions") {
    Lts lts = testing::lts_of("Z = 0\n", {"Z"});
    StateId z = *lts.root("Z");

    // (0, T): attacker stuck, defender wins
    HmlGame top_game = build_hml_game(lts, z, Formula::top());
    CHECK(top_game.game().position_count() == 1);
    CHECK_FALSE(compute_winning_region(top_game.game()).attacker_wins(
        top_game.initial()));

    // (0, !T): defender stuck, attacker wins
    HmlGame neg_top = build_hml_game(lts, z, Formula::neg(Formula::top()));
    CHECK(compute_winning_region(neg_top.game()).attacker_wins(neg_top.initial()));
}

TEST_CASE("hml game on (P2, <a>!<d>) follows the expected shape") {
    Lts lts = testing::lts_of(testing::machines_p1_p2, {"P1", "P2"});
    StateId p2 = *lts.root("P2");
    HmlGame game = build_hml_game(lts, p2, parse_formula("<a>!<d>"));

    // initial defender position with two observation moves
    CHECK(game.game().is_defender(game.initial()));
    REQUIRE(game.game().moves(game.initial()).size() == 2);

    // every play ends in the stuck defender position (0, !T)
    WinningRegion region = compute_winning_region(game.game());
    CHECK(region.attacker_wins(game.initial()));
}

TEST_CASE("game semantics and recursive evaluation agree") {
    std::mt19937 rng(31);
    for (int round = 0; round < 150; ++round) {
        Lts lts = testing::random_lts(rng);
        std::vector<Action> alphabet = lts.alphabet();
        if (alphabet.empty()) alphabet.push_back(a);
        Formula f = testing::random_formula(rng, alphabet);
        std::uniform_int_distribution<int> pick(0,
                                                static_cast<int>(lts.state_count()) - 1);
        StateId s = pick(rng);
        CHECK(satisfies(lts, s, f) == hml_game_satisfies(lts, s, f));
    }
}

TEST_CASE("distinguishes on the introduction example") {
    Lts lts = testing::lts_of(testing::machines_p1_p2, {"P1", "P2"});
    StateId p1 = *lts.root("P1");
    StateId p2 = *lts.root("P2");
    Formula probe = parse_formula("<a>!<d>");

    CHECK(distinguishes(lts, probe, p1, {p2}));
    CHECK_FALSE(distinguishes(lts, probe, p2, {p1}));
    CHECK(distinguishes(lts, Formula::top(), p1, {}));
}
