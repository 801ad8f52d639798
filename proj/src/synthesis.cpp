#include "spectro/synthesis.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace spectro {

FormulaSet make_formula_set(std::vector<Formula> formulas) {
    std::sort(formulas.begin(), formulas.end(), FormulaLess{});
    formulas.erase(std::unique(formulas.begin(), formulas.end()), formulas.end());
    return formulas;
}

StrategyGraph winning_strategy_graph(const SpectroscopyGame& game,
                                     const WinningRegion& region, int root) {
    if (!region.attacker_wins(root))
        throw std::invalid_argument(
            "strategy graph root is not attacker-won");

    StrategyGraph graph;
    graph.game_ = &game;
    graph.root_ = root;
    const int n = static_cast<int>(game.position_count());
    graph.in_graph_.assign(n, false);
    graph.successors_.resize(n);
    graph.predecessors_.resize(n);

    std::deque<int> frontier{root};
    graph.in_graph_[root] = true;
    while (!frontier.empty()) {
        int g = frontier.front();
        frontier.pop_front();
        for (const auto& move : game.game().moves(g)) {
            if (!region.attacker_wins(move.target)) continue;
            graph.successors_[g].push_back(move);
            graph.predecessors_[move.target].push_back(g);
            if (!graph.in_graph_[move.target]) {
                graph.in_graph_[move.target] = true;
                frontier.push_back(move.target);
            }
        }
    }
    return graph;
}

namespace {

// Cartesian combination of conjunct choices at a defender position. Partial
// choices are conjunct sets; a partial that is a strict superset of another
// can only end up at least as expensive for every completion, so it is
// dropped early.
std::vector<FormulaSet> conjunct_choices(
    const StrategyGraph& graph, const FormulaSetMap& strats, int position) {
    std::vector<FormulaSet> partials{FormulaSet{}};
    for (const auto& move : graph.successors(position)) {
        const FormulaSet& options = *strats[move.target];
        std::vector<FormulaSet> extended;
        for (const FormulaSet& partial : partials) {
            for (const Formula& choice : options) {
                FormulaSet next = partial;
                auto it = std::lower_bound(next.begin(), next.end(), choice,
                                           FormulaLess{});
                if (it == next.end() || !(*it == choice)) next.insert(it, choice);
                extended.push_back(std::move(next));
            }
        }
        std::sort(extended.begin(), extended.end(),
                  [](const FormulaSet& a, const FormulaSet& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      for (std::size_t i = 0; i < a.size(); ++i) {
                          int c = compare(a[i], b[i]);
                          if (c) return c < 0;
                      }
                      return false;
                  });
        extended.erase(std::unique(extended.begin(), extended.end()),
                       extended.end());
        // drop strict supersets (smaller sets sort first)
        std::vector<FormulaSet> kept;
        for (FormulaSet& candidate : extended) {
            bool covered = false;
            for (const FormulaSet& small : kept) {
                if (small.size() >= candidate.size()) continue;
                covered = std::includes(candidate.begin(), candidate.end(),
                                        small.begin(), small.end(),
                                        FormulaLess{});
                if (covered) break;
            }
            if (!covered) kept.push_back(std::move(candidate));
        }
        partials = std::move(kept);
        if (partials.empty()) break;  // some successor still has no formulas
    }
    return partials;
}

}  // namespace

FormulaSet tentative_formulas(const StrategyGraph& graph,
                              const FormulaSetMap& strats, int position) {
    const SpectroscopyGame& game = graph.game();
    std::vector<Formula> out;

    if (game.position(position).kind == SpecPosition::Kind::defender) {
        if (graph.successors(position).empty()) return {Formula::top()};
        for (FormulaSet& conjuncts : conjunct_choices(graph, strats, position))
            out.push_back(Formula::conj(std::move(conjuncts)));
        return make_formula_set(std::move(out));
    }

    for (const auto& move : graph.successors(position)) {
        const MoveLabel& label = game.label(move.label);
        const FormulaSet& source = *strats[move.target];
        switch (label.kind) {
            case MoveLabel::Kind::observation:
                for (const Formula& f : source)
                    out.push_back(Formula::obs(label.action, f));
                break;
            case MoveLabel::Kind::negation:
                for (const Formula& f : source) out.push_back(Formula::neg(f));
                break;
            case MoveLabel::Kind::conjunction:
                for (const Formula& f : source) out.push_back(f);
                break;
            case MoveLabel::Kind::star:
                break;  // defender move, never starts at an attacker position
        }
    }
    return make_formula_set(std::move(out));
}

FormulaSet prune_dominated(const FormulaSet& formulas) {
    auto double_negation = [](const Formula& f) {
        return f.kind() == Formula::Kind::negation &&
               f.body().kind() == Formula::Kind::negation;
    };

    std::vector<Price> prices;
    prices.reserve(formulas.size());
    for (const Formula& f : formulas) prices.push_back(standalone_price(f));

    FormulaSet kept;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const Formula& f = formulas[i];
        if (double_negation(f)) continue;  // never useful, always dropped
        bool dominated = false;
        for (std::size_t j = 0; j < formulas.size() && !dominated; ++j) {
            // a double negation is no justification for dropping others:
            // its skewed price undercuts formulas the completeness argument
            // needs to survive
            if (double_negation(formulas[j])) continue;
            if (!prices[j].strictly_below(prices[i])) continue;
            const Formula& g = formulas[j];
            if (f.kind() == Formula::Kind::observation &&
                g.kind() != Formula::Kind::observation)
                continue;
            if (f.kind() == Formula::Kind::negation &&
                g.kind() != Formula::Kind::negation)
                continue;
            dominated = true;
        }
        if (!dominated) kept.push_back(f);
    }
    return kept;
}

namespace {

Price default_cap(const Lts& lts) {
    auto n = static_cast<Price::Component>(lts.state_count());
    return Price(n, n, n, n, n, n);
}

}  // namespace

FormulaSetMap solve_formulas(const StrategyGraph& graph, const Price& cap,
                             std::size_t& cap_filtered) {
    const int n = static_cast<int>(graph.game().position_count());
    FormulaSetMap strats(n);
    std::vector<bool> queued(n, false);
    std::deque<int> todo;

    todo.push_back(graph.root());
    queued[graph.root()] = true;

    // Each position ranges over finitely many capped formula sets, so the
    // iteration settles; the guard turns a hypothetical divergence into a
    // loud failure instead of a hang.
    std::size_t updates = 0;
    const std::size_t update_limit =
        10'000'000 + static_cast<std::size_t>(n) * 1000;

    while (!todo.empty()) {
        int g = todo.front();
        todo.pop_front();
        queued[g] = false;

        const bool was_defined = strats[g].has_value();
        if (!was_defined) strats[g] = FormulaSet{};

        std::vector<int> unexplored;
        for (const auto& move : graph.successors(g))
            if (!strats[move.target].has_value()) unexplored.push_back(move.target);

        if (!unexplored.empty()) {
            for (auto it = unexplored.rbegin(); it != unexplored.rend(); ++it)
                if (!queued[*it]) {
                    todo.push_front(*it);
                    queued[*it] = true;
                }
            continue;
        }

        FormulaSet computed = tentative_formulas(graph, strats, g);
        FormulaSet capped;
        capped.reserve(computed.size());
        for (Formula& f : computed) {
            if (standalone_price(f).leq(cap))
                capped.push_back(std::move(f));
            else
                ++cap_filtered;
        }
        computed = prune_dominated(capped);

        if (!was_defined || *strats[g] != computed) {
            strats[g] = std::move(computed);
            if (++updates > update_limit)
                throw std::runtime_error(
                    "formula fixed point failed to stabilize");
            for (int pred : graph.predecessors(g))
                if (!queued[pred]) {
                    todo.push_back(pred);
                    queued[pred] = true;
                }
        }
    }
    return strats;
}

namespace {

Verdict all_preordered_verdict(bool with_s3) {
    return classify({}, with_s3);
}

DirectionResult direction_from_strats(const SpectroscopyGame& game,
                                      const FormulaSetMap& strats,
                                      StateId lhs, StateId rhs, bool with_s3) {
    DirectionResult direction;
    direction.lhs = lhs;
    direction.rhs = rhs;
    auto position = game.find(SpecPosition::attacker(lhs, StateSet{rhs}));
    if (position && strats[*position].has_value())
        direction.formulas = *strats[*position];
    direction.front = minimal_prices(direction.formulas);
    std::vector<Price> prices;
    prices.reserve(direction.front.size());
    for (const auto& [price, f] : direction.front) prices.push_back(price);
    direction.verdict = classify(prices, with_s3);
    return direction;
}

}  // namespace

SpectroscopyResult spectroscope(const Lts& lts, StateId p0, StateId q0,
                                const SynthesisOptions& options) {
    SpectroscopyResult result;
    result.cap = options.cap.value_or(default_cap(lts));

    SpectroscopyGame game = build_game(lts, p0, StateSet{q0}, options.game);
    result.game_positions = game.position_count();
    result.game_moves = game.game().move_count();

    WinningRegion region = compute_winning_region(game.game());

    if (!region.attacker_wins(game.initial())) {
        result.bisimilar = true;
        result.bisimulation = extract_bisimulation(game, region);
        result.forward.lhs = p0;
        result.forward.rhs = q0;
        result.forward.verdict = all_preordered_verdict(options.with_s3);
        result.backward.lhs = q0;
        result.backward.rhs = p0;
        result.backward.verdict = all_preordered_verdict(options.with_s3);
        return result;
    }

    StrategyGraph graph =
        winning_strategy_graph(game, region, game.initial());
    FormulaSetMap strats = solve_formulas(graph, result.cap, result.cap_filtered);

#ifndef NDEBUG
    // Every stored formula distinguishes its position's left state from the
    // whole right-hand set.
    for (int g = 0; g < static_cast<int>(game.position_count()); ++g) {
        if (!strats[g].has_value()) continue;
        const SpecPosition& pos = game.position(g);
        if (pos.kind == SpecPosition::Kind::defender) continue;
        for (const Formula& f : *strats[g])
            assert(distinguishes(lts, f, pos.p, pos.q));
    }
#endif

    result.forward =
        direction_from_strats(game, strats, p0, q0, options.with_s3);
    result.backward =
        direction_from_strats(game, strats, q0, p0, options.with_s3);

    // [q0, {p0}] shares the initial position's winning region, so both
    // directions normally come from this one graph; a defender-won reverse
    // position would mean no formula distinguishes that direction at all.
    if (auto reverse = game.find(SpecPosition::attacker(q0, StateSet{p0}));
        reverse && !region.attacker_wins(*reverse)) {
        result.backward.formulas.clear();
        result.backward.front.clear();
        result.backward.verdict = all_preordered_verdict(options.with_s3);
    }

    return result;
}

}  // namespace spectro
