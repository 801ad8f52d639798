#ifndef SPECTRO_HML_GAME_HPP
#define SPECTRO_HML_GAME_HPP

#include <map>
#include <tuple>

#include "spectro/game.hpp"
#include "spectro/hml.hpp"
#include "spectro/lts.hpp"

namespace spectro {

// The model-checking game for one state and one formula. Positions pair a
// state with a subformula and a polarity flag (the flag encodes a pending
// top-level negation, so "(p, !phi)" is stored as (p, phi, negated)). The
// defender owns observations and negated conjunctions, the attacker the
// rest; the defender wins from the initial position exactly when the formula
// holds at the state.
class HmlGame {
public:
    struct Position {
        StateId state;
        Formula formula;
        bool negated;
    };

    const ReachabilityGame& game() const { return game_; }
    int initial() const { return initial_; }
    const Position& position(int g) const { return positions_[g]; }

private:
    ReachabilityGame game_;
    std::vector<Position> positions_;
    int initial_ = -1;

    friend HmlGame build_hml_game(const Lts& lts, StateId p, const Formula& f);
};

HmlGame build_hml_game(const Lts& lts, StateId p, const Formula& f);

// Convenience: defender wins the game from the initial position.
bool hml_game_satisfies(const Lts& lts, StateId p, const Formula& f);

}  // namespace spectro

#endif
