#ifndef SPECTRO_SYNTHESIS_HPP
#define SPECTRO_SYNTHESIS_HPP

#include <optional>
#include <vector>

#include "spectro/hml.hpp"
#include "spectro/pricing.hpp"
#include "spectro/spectroscopy.hpp"

namespace spectro {

// Sorted, duplicate-free formula set with a deterministic iteration order.
using FormulaSet = std::vector<Formula>;

FormulaSet make_formula_set(std::vector<Formula> formulas);

// The attacker winning strategy graph: the move graph restricted to edges
// staying inside the attacker winning region, reachable from the root. All
// defender moves inside the region survive the restriction.
class StrategyGraph {
public:
    bool contains(int position) const { return in_graph_[position]; }
    const std::vector<ReachabilityGame::Move>& successors(int position) const {
        return successors_[position];
    }
    const std::vector<int>& predecessors(int position) const {
        return predecessors_[position];
    }
    int root() const { return root_; }
    const SpectroscopyGame& game() const { return *game_; }

private:
    const SpectroscopyGame* game_ = nullptr;
    std::vector<bool> in_graph_;
    std::vector<std::vector<ReachabilityGame::Move>> successors_;
    std::vector<std::vector<int>> predecessors_;
    int root_ = -1;

    friend StrategyGraph winning_strategy_graph(const SpectroscopyGame& game,
                                                const WinningRegion& region,
                                                int root);
};

// Throws std::invalid_argument when the root is not attacker-won.
StrategyGraph winning_strategy_graph(const SpectroscopyGame& game,
                                     const WinningRegion& region, int root);

// Per-position formula sets of the fixed point; disengaged entries have not
// been touched yet.
using FormulaSetMap = std::vector<std::optional<FormulaSet>>;

// One tentative-formula step: combines the successors' current sets.
// Attacker positions collect <b>-prefixed, negated, and passed-through
// formulas along their strategy edges; defender positions build every
// conjunction choosing one formula per conjunct answer (none yields T).
FormulaSet tentative_formulas(const StrategyGraph& graph,
                              const FormulaSetMap& strats, int position);

// Drops double negations, then every formula strictly dominated by another
// formula of the set, where observations only count as dominated by
// observations and negations only by negations.
FormulaSet prune_dominated(const FormulaSet& formulas);

// Worklist fixed point over the strategy graph: unexplored successors are
// descended into first, recomputed positions whose set changed wake their
// predecessors. Formulas beyond the cap are filtered before pruning;
// cap_filtered counts them.
FormulaSetMap solve_formulas(const StrategyGraph& graph, const Price& cap,
                             std::size_t& cap_filtered);

struct SynthesisOptions {
    // Per-dimension safety cap on emitted standalone prices; defaults to the
    // state count of the LTS in every dimension.
    std::optional<Price> cap;
    bool with_s3 = false;
    SpectroscopyOptions game;
};

struct DirectionResult {
    StateId lhs = -1;
    StateId rhs = -1;
    FormulaSet formulas;  // final set at [lhs, {rhs}]
    std::vector<std::pair<Price, Formula>> front;
    Verdict verdict;
};

struct SpectroscopyResult {
    bool bisimilar = false;
    std::vector<std::pair<StateId, StateId>> bisimulation;
    DirectionResult forward;
    DirectionResult backward;
    // Diagnostics.
    std::size_t cap_filtered = 0;  // formulas removed by the safety cap
    std::size_t game_positions = 0;
    std::size_t game_moves = 0;
    Price cap;
};

// Full spectroscopy of one state pair: builds the game, solves it, and
// either extracts a bisimulation (defender-won) or runs the formula fixed
// point and classifies both directions against the spectrum.
SpectroscopyResult spectroscope(const Lts& lts, StateId p0, StateId q0,
                                const SynthesisOptions& options = {});

}  // namespace spectro

#endif
