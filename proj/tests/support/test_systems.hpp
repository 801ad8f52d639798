#ifndef SPECTRO_TESTS_SUPPORT_TEST_SYSTEMS_HPP
#define SPECTRO_TESTS_SUPPORT_TEST_SYSTEMS_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spectro/game.hpp"
#include "spectro/hml.hpp"
#include "spectro/lts.hpp"

namespace spectro::testing {

// The two vending-machine style processes from the introduction example.
inline const char* machines_p1_p2 =
    "P1 = a.(b + c) + a.d\n"
    "P2 = a.(b + d) + a.(c + d)\n";

// The failure-trace regression pair (a.b against a.(a+b) + a.b.b + a).
inline const char* failure_trace_pair =
    "L = a.b\n"
    "R = a.(a + b) + a.b.b + a\n";

// The deeper pair that needs three incomparable distinguishing prices.
inline const char* processes_p3_p4 =
    "P3 = a.(b + c.d) + a.(f + c.e)\n"
    "P4 = a.(b + c.e) + a.(f + c.d)\n";

inline Lts lts_of(const char* text, std::vector<std::string> roots) {
    return derive_lts(parse(text), roots);
}

// Uniform random LTS: state 0..n-1, alphabet prefix of {a, b}, up to
// max_transitions random edges. Sizes lean toward the upper bounds so the
// corpus is not dominated by trivial systems.
inline Lts random_lts(std::mt19937& rng, int max_states = 4, int max_actions = 2,
                      int max_transitions = 6) {
    std::uniform_int_distribution<int> state_count(std::min(2, max_states),
                                                   max_states);
    std::uniform_int_distribution<int> action_count(1, std::min(max_actions, 3));
    const int n = state_count(rng);
    const int k = action_count(rng);
    std::uniform_int_distribution<int> state(0, n - 1);
    std::uniform_int_distribution<int> action(0, k - 1);
    std::uniform_int_distribution<int> transition_count(
        std::min(3, max_transitions), max_transitions);

    // Render as definitions so the random systems flow through the same
    // front door as everything else. Recursion gives cyclic systems.
    const char* names[] = {"a", "b", "c"};
    std::vector<std::vector<std::pair<int, int>>> edges(n);
    const int m = transition_count(rng);
    for (int i = 0; i < m; ++i) edges[state(rng)].emplace_back(action(rng), state(rng));

    std::string text;
    for (int s = 0; s < n; ++s) {
        text += "S" + std::to_string(s) + " = ";
        if (edges[s].empty()) {
            text += "0\n";
            continue;
        }
        for (std::size_t i = 0; i < edges[s].size(); ++i) {
            if (i) text += " + ";
            text += names[edges[s][i].first];
            text += ".S" + std::to_string(edges[s][i].second);
        }
        text += "\n";
    }
    std::vector<std::string> roots;
    for (int s = 0; s < n; ++s) roots.push_back("S" + std::to_string(s));
    return derive_lts(parse(text), roots);
}

// Signature-refinement bisimilarity: iteratively split blocks by the set of
// (action, target block) pairs until stable. Independent of the game route.
inline std::vector<int> bisimilarity_partition(const Lts& lts) {
    const int n = static_cast<int>(lts.state_count());
    std::vector<int> block(n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::vector<std::pair<std::string, int>>> signatures(n);
        for (int s = 0; s < n; ++s) {
            for (const auto& [action, target] : lts.out(s))
                signatures[s].emplace_back(action.name(), block[target]);
            std::sort(signatures[s].begin(), signatures[s].end());
            signatures[s].erase(
                std::unique(signatures[s].begin(), signatures[s].end()),
                signatures[s].end());
        }
        std::map<std::pair<int, std::vector<std::pair<std::string, int>>>, int>
            renumber;
        std::vector<int> next(n);
        for (int s = 0; s < n; ++s) {
            auto key = std::make_pair(block[s], signatures[s]);
            auto it = renumber.find(key);
            if (it == renumber.end())
                it = renumber.emplace(key, static_cast<int>(renumber.size())).first;
            next[s] = it->second;
        }
        if (next != block) {
            block = std::move(next);
            changed = true;
        }
    }
    return block;
}

inline bool bisimilar(const Lts& lts, StateId p, StateId q) {
    auto partition = bisimilarity_partition(lts);
    return partition[p] == partition[q];
}

// Reference solver: least fixed point of "attacker position with a move into
// the attacker region, or defender position with all moves inside it".
inline std::vector<bool> naive_attacker_region(const ReachabilityGame& game) {
    const int n = static_cast<int>(game.position_count());
    std::vector<bool> win(n, false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int g = 0; g < n; ++g) {
            if (win[g]) continue;
            bool attacker_wins;
            if (game.is_defender(g)) {
                attacker_wins = true;
                for (const auto& move : game.moves(g))
                    attacker_wins = attacker_wins && win[move.target];
            } else {
                attacker_wins = false;
                for (const auto& move : game.moves(g))
                    attacker_wins = attacker_wins || win[move.target];
            }
            if (attacker_wins) {
                win[g] = true;
                changed = true;
            }
        }
    }
    return win;
}

inline ReachabilityGame random_game(std::mt19937& rng, int max_positions = 200) {
    std::uniform_int_distribution<int> position_count(1, max_positions);
    const int n = position_count(rng);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> target(0, n - 1);
    std::uniform_int_distribution<int> degree(0, 3);

    ReachabilityGame game;
    for (int g = 0; g < n; ++g) game.add_position(coin(rng) == 0);
    for (int g = 0; g < n; ++g) {
        const int d = degree(rng);
        for (int i = 0; i < d; ++i) game.add_move(g, target(rng));
    }
    return game;
}

// Random flattened formula without double negations or negated conjunctions.
inline Formula random_formula(std::mt19937& rng, const std::vector<Action>& alphabet,
                              int depth = 3) {
    std::uniform_int_distribution<int> shape(0, depth <= 0 ? 0 : 3);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    switch (shape(rng)) {
        case 1:
            return Formula::obs(alphabet[pick(rng)],
                                random_formula(rng, alphabet, depth - 1));
        case 2: {  // negation of an observation
            Formula body = Formula::obs(alphabet[pick(rng)],
                                        random_formula(rng, alphabet, depth - 1));
            return Formula::neg(body);
        }
        case 3: {
            std::uniform_int_distribution<int> width(2, 3);
            std::vector<Formula> conjuncts;
            const int w = width(rng);
            for (int i = 0; i < w; ++i) {
                Formula c = Formula::obs(alphabet[pick(rng)],
                                         random_formula(rng, alphabet, depth - 1));
                if (std::uniform_int_distribution<int>(0, 1)(rng) == 1)
                    c = Formula::neg(c);
                conjuncts.push_back(std::move(c));
            }
            return Formula::conj(std::move(conjuncts));
        }
        default:
            return Formula::top();
    }
}

}  // namespace spectro::testing

#endif
