#ifndef SPECTRO_ORACLE_HPP
#define SPECTRO_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "spectro/hml.hpp"
#include "spectro/pricing.hpp"

namespace spectro {

// Bounds for exhaustive formula search. All cap components must be finite.
struct EnumerationBudget {
    Price cap;
    std::size_t max_conjuncts = 0;

    bool valid() const { return cap.all_finite(); }
};

// Every flattened formula over the alphabet with standalone price within the
// cap, at most max_conjuncts conjuncts per conjunction, no double negations
// and no negated conjunctions; conjunct lists are sets. Grows very fast with
// the cap; meant for small budgets.
std::vector<Formula> enumerate_formulas(const std::vector<Action>& alphabet,
                                        const EnumerationBudget& budget);

// Reference solution of the cheapest-distinction problem by exhaustive
// search: the Pareto front of standalone prices over all budget-conforming
// formulas that hold at p and fail at q, one witness formula per front
// price. Formulas are explored per semantic class (state-set denotation plus
// price data), which keeps the search exact while ducking the syntactic
// blowup; only LTSs up to 64 states are supported.
std::vector<std::pair<Price, Formula>> brute_force_front(
    const Lts& lts, StateId p, StateId q, const EnumerationBudget& budget);

// Same search against a whole set of right-hand states, optionally
// restricted to one top-level formula shape (used to probe the per-position
// formula sets of the synthesis fixed point).
std::vector<std::pair<Price, Formula>> brute_force_front(
    const Lts& lts, StateId p, const StateSet& qs,
    const EnumerationBudget& budget,
    std::optional<Formula::Kind> kind = std::nullopt);

}  // namespace spectro

#endif
