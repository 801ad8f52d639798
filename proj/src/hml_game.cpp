#include "spectro/hml_game.hpp"

#include <deque>

namespace spectro {

namespace {

struct PositionKey {
    StateId state;
    Formula formula;
    bool negated;

    bool operator<(const PositionKey& o) const {
        if (state != o.state) return state < o.state;
        if (negated != o.negated) return negated < o.negated;
        return compare(formula, o.formula) < 0;
    }
};

}  // namespace

HmlGame build_hml_game(const Lts& lts, StateId p, const Formula& f) {
    HmlGame result;
    std::map<PositionKey, int> index;
    std::deque<int> frontier;

    // (p, phi) with a top-level negation is canonicalized into the polarity
    // flag; (p, !!phi) keeps one explicit negation so the double-negation
    // move stays observable.
    auto intern = [&](StateId state, Formula formula, bool negated) {
        if (!negated && formula.kind() == Formula::Kind::negation) {
            formula = formula.body();
            negated = true;
        }
        PositionKey key{state, formula, negated};
        auto it = index.find(key);
        if (it != index.end()) return it->second;

        bool defender;
        if (!negated)  // plain observation or conjunction
            defender = formula.kind() == Formula::Kind::observation;
        else  // negated observation/conjunction/negation
            defender = formula.kind() == Formula::Kind::conjunction;

        int id = result.game_.add_position(defender);
        result.positions_.push_back(HmlGame::Position{state, formula, negated});
        index.emplace(key, id);
        frontier.push_back(id);
        return id;
    };

    result.initial_ = intern(p, f, false);

    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        // positions_ may reallocate while interning successors
        const StateId state = result.positions_[id].state;
        const Formula formula = result.positions_[id].formula;
        const bool negated = result.positions_[id].negated;

        switch (formula.kind()) {
            case Formula::Kind::observation:
                // (p,<a>phi) -> (p',phi); (p,!<a>phi) -> (p',!phi)
                for (const auto& [action, target] : lts.out(state))
                    if (action == formula.action())
                        result.game_.add_move(
                            id, intern(target, formula.body(), negated));
                break;
            case Formula::Kind::conjunction:
                // (p,/\ phis) -> (p,phi_i); (p,!/\ phis) -> (p,!phi_i)
                for (const Formula& c : formula.conjuncts())
                    result.game_.add_move(id, intern(state, c, negated));
                break;
            case Formula::Kind::negation:
                // only reachable as (p,!!phi): strip both negations
                result.game_.add_move(id, intern(state, formula.body(), false));
                break;
        }
    }
    return result;
}

bool hml_game_satisfies(const Lts& lts, StateId p, const Formula& f) {
    HmlGame g = build_hml_game(lts, p, f);
    WinningRegion region = compute_winning_region(g.game());
    return !region.attacker_wins(g.initial());
}

}  // namespace spectro
