#include <doctest.h>

#include <random>

#include "spectro/pricing.hpp"
#include "support/test_systems.hpp"

using namespace spectro;

namespace {

Price price_of(const char* formula) {
    return standalone_price(parse_formula(formula));
}

}  // namespace

TEST_CASE("lattice order, strict order, join") {
    constexpr auto inf = Price::infinity;
    CHECK(Price(2, 1, 0, 0, 1, 1).leq(Price(inf, 1, 0, 0, 1, 1)));
    CHECK_FALSE(Price(1, 1, 0, 0, 1, 1).strictly_below(Price(1, 0, 0, 0, 0, 0)));
    // incomparability
    CHECK_FALSE(Price(1, 1, 0, 0, 1, 1).leq(Price(1, 0, 0, 0, 0, 0)));
    // the observation dominates the negation, not vice versa
    CHECK(Price(1, 0, 0, 0, 0, 0).strictly_below(Price(1, 1, 0, 0, 1, 1)));
    CHECK(Price(3, 1, 1, 2, 0, 0).join(Price(3, 1, 0, 0, 1, 2)) ==
          Price(3, 1, 1, 2, 1, 2));
    CHECK(Price(1, 0, 0, 0, 0, 0).join(Price::zero()) == Price(1, 0, 0, 0, 0, 0));
}

TEST_CASE("price rendering") {
    CHECK(Price(2, 1, 0, 0, 1, 1).to_string() == "(2,1,0,0,1,1)");
    CHECK(Price(Price::infinity, 1, 0, 0, 1, 1).to_string() == "(inf,1,0,0,1,1)");
}

TEST_CASE("expressiveness prices of the worked examples") {
    CHECK(price_of("T") == Price(0, 0, 0, 0, 0, 0));
    CHECK(price_of("<a>") == Price(1, 0, 0, 0, 0, 0));
    CHECK(price_of("<a>!<d>") == Price(2, 1, 0, 0, 1, 1));
    CHECK(price_of("<a>/\\{<b>, <c>}") == Price(2, 1, 0, 2, 0, 0));
    CHECK(price_of("<a>/\\{<b>, <c><d>}") == Price(3, 1, 1, 2, 0, 0));
    CHECK(price_of("<a>/\\{!<f>, <c><d>}") == Price(3, 1, 1, 1, 1, 1));
    CHECK(price_of("<a>/\\{!<b>, !<c><d>}") == Price(3, 1, 0, 0, 1, 2));
    CHECK(price_of("!<a><a>") == Price(2, 1, 0, 0, 1, 2));
    CHECK(price_of("<a>/\\{!<a>, <b>!<b>}") == Price(3, 2, 1, 1, 1, 1));

    // the pending-negation wrapper is what makes !<d> cost a conjunction
    CHECK(expressiveness_price(parse_formula("!<d>")) == Price(1, 0, 0, 0, 1, 1));
    CHECK(price_of("!<d>") == Price(1, 1, 0, 0, 1, 1));
}

TEST_CASE("virtual conjunctions in front of negations stabilize prices") {
    // three shapes of the same negated behavior, all priced (2,2,0,0,2,2)
    CHECK(price_of("!<a>/\\{!<b>, !<a>}") == Price(2, 2, 0, 0, 2, 2));
    CHECK(price_of("!<a>/\\{!<b>}") == Price(2, 2, 0, 0, 2, 2));
    CHECK(price_of("!<a>!<b>") == Price(2, 2, 0, 0, 2, 2));
}

TEST_CASE("a locally cheaper conjunct can be globally more expensive") {
    CHECK(price_of("!<a>") == Price(1, 1, 0, 0, 1, 1));
    CHECK(price_of("<b>") == Price(1, 0, 0, 0, 0, 0));
    // inside /\{!<c>, _}: the negation keeps the price low
    CHECK(price_of("/\\{!<c>, !<a>}") == Price(1, 1, 0, 0, 1, 1));
    CHECK(price_of("/\\{!<c>, <b>}") == Price(1, 1, 0, 1, 1, 1));
}

TEST_CASE("budgets per notion") {
    constexpr auto inf = Price::infinity;
    CHECK(budget(Notion::E) == Price(1, 0, 0, 0, 0, 0));
    CHECK(budget(Notion::T) == Price(inf, 0, 0, 0, 0, 0));
    CHECK(budget(Notion::F) == Price(inf, 1, 0, 0, 1, 1));
    CHECK(budget(Notion::R) == Price(inf, 1, 0, inf, 1, 1));
    CHECK(budget(Notion::FT) == Price(inf, inf, 1, 1, 1, 1));
    CHECK(budget(Notion::RT) == Price(inf, inf, 1, inf, 1, 1));
    CHECK(budget(Notion::IF) == Price(inf, 1, 0, 0, 1, inf));
    CHECK(budget(Notion::PF) == Price(inf, 1, inf, inf, 1, inf));
    CHECK(budget(Notion::RS) == Price(inf, inf, inf, inf, 1, 1));
    CHECK(budget(Notion::B) == Price(inf, inf, inf, inf, inf, inf));
    // n-nested simulation uses n-1 negations; at n = 1 the negated
    // observation depth is vacuously 0 as well
    CHECK(nested_simulation_budget(1) == Price(inf, inf, inf, inf, 0, 0));
    CHECK(budget(Notion::S1) == nested_simulation_budget(1));
    CHECK(budget(Notion::S2) == Price(inf, inf, inf, inf, 1, inf));
    CHECK(budget(Notion::S3) == Price(inf, inf, inf, inf, 2, inf));
    CHECK_THROWS_AS(nested_simulation_budget(0), std::invalid_argument);
}

TEST_CASE("all budget pairs are distinct") {
    auto notions = notion_set(true);
    for (std::size_t i = 0; i < notions.size(); ++i)
        for (std::size_t j = i + 1; j < notions.size(); ++j)
            CHECK(budget(notions[i]) != budget(notions[j]));
}

TEST_CASE("language membership by price") {
    CHECK(in_language(parse_formula("<a>!<d>"), Notion::F));
    CHECK(in_language(Formula::top(), Notion::E));
    Formula mixed = parse_formula("<a>/\\{!<b>, !<c><d>}");
    CHECK(in_language(mixed, Notion::IF));
    CHECK_FALSE(in_language(mixed, Notion::FT));
}

TEST_CASE("language membership respects budget inclusion") {
    std::mt19937 rng(41);
    std::vector<Action> alphabet{Action{"a"}, Action{"b"}};
    auto notions = notion_set(true);
    for (int round = 0; round < 120; ++round) {
        Formula f = testing::random_formula(rng, alphabet);
        for (Notion x : notions)
            for (Notion y : notions)
                if (budget(x).leq(budget(y)))
                    CHECK((!in_language(f, x) || in_language(f, y)));
    }
}

TEST_CASE("substituting a cheaper like-for-like subformula never costs more") {
    std::mt19937 rng(43);
    std::vector<Action> alphabet{Action{"a"}, Action{"b"}};
    int checked = 0;
    while (checked < 60) {
        Formula f = testing::random_formula(rng, alphabet, 2);
        Formula g = testing::random_formula(rng, alphabet, 2);
        if (f.kind() != g.kind()) continue;
        if (f.kind() == Formula::Kind::conjunction) continue;
        if (!standalone_price(f).leq(standalone_price(g))) continue;
        ++checked;
        // non-conjunct contexts: observation prefix and negation (negation
        // only over observations)
        Action prefix{"a"};
        CHECK(standalone_price(Formula::obs(prefix, f))
                  .leq(standalone_price(Formula::obs(prefix, g))));
        if (f.kind() == Formula::Kind::observation)
            CHECK(standalone_price(Formula::neg(f))
                      .leq(standalone_price(Formula::neg(g))));
    }
}

TEST_CASE("minimal_prices keeps incomparable prices and drops dominated ones") {
    Formula failure = parse_formula("<a>!<d>");
    Formula ready = parse_formula("<a>/\\{<b>, <c>}");
    auto front = minimal_prices({failure, ready});
    REQUIRE(front.size() == 2);
    CHECK(front[0].first == Price(2, 1, 0, 0, 1, 1));
    CHECK(front[1].first == Price(2, 1, 0, 2, 0, 0));

    CHECK(minimal_prices({}).empty());

    Formula cheap = parse_formula("!<a><a>");
    Formula costly = parse_formula("<a>/\\{!<a>, !<b><b>, <b>}");
    CHECK(standalone_price(costly) == Price(3, 1, 0, 1, 1, 2));
    auto pruned = minimal_prices({cheap, costly});
    REQUIRE(pruned.size() == 1);
    CHECK(pruned[0].first == Price(2, 1, 0, 0, 1, 2));
    CHECK(pruned[0].second == cheap);
}

TEST_CASE("minimal_prices picks the lexicographically smallest witness") {
    // two distinct formulas with the same price
    Formula w1 = parse_formula("<a><b>");
    Formula w2 = parse_formula("<a><a>");
    auto front = minimal_prices({w1, w2});
    REQUIRE(front.size() == 1);
    CHECK(front[0].second.to_string() == "<a><a>");
}

TEST_CASE("classification of an empty front: everything preordered") {
    Verdict verdict = classify({});
    CHECK(verdict.distinguished.empty());
    CHECK(verdict.preordered.size() == notion_set(false).size());
    CHECK(verdict.coarsest_distinguishing.empty());
    REQUIRE(verdict.finest_preorders.size() == 1);
    CHECK(verdict.finest_preorders[0] == Notion::B);
}

TEST_CASE("classification of a failure-priced front") {
    Verdict verdict = classify({Price(2, 1, 0, 0, 1, 1)});
    auto has = [](const std::vector<Notion>& set, Notion x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    for (Notion x : {Notion::F, Notion::R, Notion::FT, Notion::RT, Notion::IF,
                     Notion::PF, Notion::RS, Notion::S2, Notion::B})
        CHECK(has(verdict.distinguished, x));
    for (Notion x : {Notion::E, Notion::T, Notion::S1})
        CHECK(has(verdict.preordered, x));
    REQUIRE(verdict.coarsest_distinguishing.size() == 1);
    CHECK(verdict.coarsest_distinguishing[0] == Notion::F);
}

TEST_CASE("classification matches the failure-trace regression example") {
    Verdict verdict = classify({Price(3, 2, 1, 1, 1, 1), Price(2, 1, 0, 0, 1, 2)});
    auto has = [](const std::vector<Notion>& set, Notion x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    CHECK(has(verdict.coarsest_distinguishing, Notion::FT));
    CHECK(has(verdict.coarsest_distinguishing, Notion::IF));
    CHECK(verdict.coarsest_distinguishing.size() == 2);
    CHECK(has(verdict.finest_preorders, Notion::S1));
    CHECK(has(verdict.finest_preorders, Notion::R));
}

TEST_CASE("distinguished is upward closed, preordered downward closed") {
    std::mt19937 rng(47);
    auto notions = notion_set(true);
    std::uniform_int_distribution<int> component(0, 3);
    auto has = [](const std::vector<Notion>& set, Notion x) {
        return std::find(set.begin(), set.end(), x) != set.end();
    };
    for (int round = 0; round < 100; ++round) {
        std::vector<Price> front;
        for (int i = 0; i < 2; ++i)
            front.push_back(Price(component(rng), component(rng), component(rng),
                                  component(rng), component(rng), component(rng)));
        Verdict verdict = classify(front, true);
        for (const auto& [finer, coarser] : spectrum_edges(true)) {
            if (has(verdict.distinguished, coarser))
                CHECK(has(verdict.distinguished, finer));
            if (has(verdict.preordered, finer))
                CHECK(has(verdict.preordered, coarser));
        }
    }
}

TEST_CASE("spectrum order agrees with budget order") {
    for (bool with_s3 : {false, true})
        for (const auto& [finer, coarser] : spectrum_edges(with_s3))
            CHECK(budget(coarser).leq(budget(finer)));
}
