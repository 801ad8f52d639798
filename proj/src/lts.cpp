#include "spectro/lts.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace spectro {

StateSet make_state_set(std::vector<StateId> states) {
    std::sort(states.begin(), states.end());
    states.erase(std::unique(states.begin(), states.end()), states.end());
    return states;
}

bool state_set_contains(const StateSet& set, StateId s) {
    return std::binary_search(set.begin(), set.end(), s);
}

ProcessTerm canonicalize(const ProcessTerm& term) {
    switch (term.kind()) {
        case ProcessTerm::Kind::nil:
        case ProcessTerm::Kind::reference:
            return term;
        case ProcessTerm::Kind::prefix:
            return ProcessTerm::prefix(term.action(),
                                       canonicalize(term.continuation()));
        case ProcessTerm::Kind::choice: {
            std::vector<ProcessTerm> branches;
            branches.reserve(term.branches().size());
            for (const auto& b : term.branches()) branches.push_back(canonicalize(b));
            std::sort(branches.begin(), branches.end());
            return ProcessTerm::choice(std::move(branches));
        }
    }
    return term;
}

namespace {

// One-step successors of a canonical term; references unfold one level.
// Unguarded reference cycles (X = Y, Y = X) have no transitions in the least
// fixed point, so revisited names contribute nothing.
void term_steps(const ProcessTerm& term, const ProcessDefinitions& defs,
                std::vector<std::string>& unfolding,
                std::vector<std::pair<Action, ProcessTerm>>& out) {
    switch (term.kind()) {
        case ProcessTerm::Kind::nil:
            break;
        case ProcessTerm::Kind::prefix:
            out.emplace_back(term.action(), canonicalize(term.continuation()));
            break;
        case ProcessTerm::Kind::choice:
            for (const auto& b : term.branches())
                term_steps(b, defs, unfolding, out);
            break;
        case ProcessTerm::Kind::reference: {
            const std::string& name = term.reference_name();
            if (std::find(unfolding.begin(), unfolding.end(), name) !=
                unfolding.end())
                break;
            unfolding.push_back(name);
            term_steps(defs.lookup(name), defs, unfolding, out);
            unfolding.pop_back();
            break;
        }
    }
}

void collect_actions(const ProcessTerm& term, std::vector<Action>& out) {
    switch (term.kind()) {
        case ProcessTerm::Kind::nil:
        case ProcessTerm::Kind::reference:
            break;
        case ProcessTerm::Kind::prefix:
            out.push_back(term.action());
            collect_actions(term.continuation(), out);
            break;
        case ProcessTerm::Kind::choice:
            for (const auto& b : term.branches()) collect_actions(b, out);
            break;
    }
}

}  // namespace

Lts derive_lts(const ProcessDefinitions& defs,
               const std::vector<std::string>& roots) {
    std::vector<ProcessTerm> terms;
    for (const auto& name : roots) {
        if (!defs.contains(name))
            throw ParseError("unresolved reference to '" + name + "'", 0, 0);
        terms.push_back(ProcessTerm::reference(name));
    }
    return derive_lts(defs, terms);
}

Lts derive_lts(const ProcessDefinitions& defs,
               const std::vector<ProcessTerm>& root_terms) {
    Lts lts;

    std::vector<Action> actions;
    for (const auto& [name, term] : defs.bindings()) collect_actions(term, actions);
    for (const ProcessTerm& term : root_terms) collect_actions(term, actions);
    std::sort(actions.begin(), actions.end());
    actions.erase(std::unique(actions.begin(), actions.end()), actions.end());
    lts.alphabet_ = std::move(actions);

    std::map<std::string, StateId> by_print;
    std::deque<std::pair<StateId, ProcessTerm>> frontier;

    auto intern = [&](const ProcessTerm& canonical) -> StateId {
        std::string key = canonical.to_string();
        auto it = by_print.find(key);
        if (it != by_print.end()) return it->second;
        StateId id = static_cast<StateId>(lts.state_names_.size());
        lts.state_names_.push_back(key);
        lts.out_.emplace_back();
        by_print.emplace(std::move(key), id);
        frontier.emplace_back(id, canonical);
        return id;
    };

    for (const ProcessTerm& term : root_terms) {
        StateId id = intern(canonicalize(term));
        if (term.kind() == ProcessTerm::Kind::reference)
            lts.roots_[term.reference_name()] = id;
    }

    while (!frontier.empty()) {
        auto [id, term] = frontier.front();
        frontier.pop_front();
        std::vector<std::pair<Action, ProcessTerm>> steps;
        std::vector<std::string> unfolding;
        term_steps(term, defs, unfolding, steps);
        for (auto& [action, target_term] : steps) {
            StateId target = intern(target_term);
            lts.out_[id].emplace_back(action, target);
        }
        auto& edges = lts.out_[id];
        std::sort(edges.begin(), edges.end(),
                  [](const auto& a, const auto& b) {
                      if (a.first != b.first) return a.first < b.first;
                      return a.second < b.second;
                  });
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    for (StateId s = 0; s < static_cast<StateId>(lts.out_.size()); ++s)
        for (const auto& [a, t] : lts.out_[s])
            lts.transitions_.push_back({s, a, t});

    return lts;
}

std::optional<StateId> Lts::root(const std::string& name) const {
    auto it = roots_.find(name);
    if (it == roots_.end()) return std::nullopt;
    return it->second;
}

StateSet post_set(const Lts& lts, const StateSet& q, const Action& a) {
    StateSet result;
    for (StateId s : q)
        for (const auto& [act, target] : lts.out(s))
            if (act == a) result.push_back(target);
    return make_state_set(std::move(result));
}

}  // namespace spectro
