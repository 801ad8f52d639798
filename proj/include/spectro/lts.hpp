#ifndef SPECTRO_LTS_HPP
#define SPECTRO_LTS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectro/ccs.hpp"

namespace spectro {

using StateId = int;

// Sorted, duplicate-free set of states. Small enough that a flat vector
// beats anything fancier.
using StateSet = std::vector<StateId>;

StateSet make_state_set(std::vector<StateId> states);
bool state_set_contains(const StateSet& set, StateId s);

// Finite labeled transition system derived from process definitions.
// States are canonicalized reachable terms; the alphabet is the set of
// actions occurring in the definitions.
class Lts {
public:
    struct Transition {
        StateId source;
        Action action;
        StateId target;
    };

    std::size_t state_count() const { return state_names_.size(); }
    const std::string& state_name(StateId s) const { return state_names_[s]; }
    const std::vector<Action>& alphabet() const { return alphabet_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    // Outgoing transitions of one state, sorted by (action, target).
    const std::vector<std::pair<Action, StateId>>& out(StateId s) const {
        return out_[s];
    }

    // State bound to a root process name passed to derive_lts.
    std::optional<StateId> root(const std::string& name) const;

private:
    std::vector<std::string> state_names_;
    std::vector<Action> alphabet_;
    std::vector<Transition> transitions_;
    std::vector<std::vector<std::pair<Action, StateId>>> out_;
    std::map<std::string, StateId> roots_;

    friend Lts derive_lts(const ProcessDefinitions& defs,
                          const std::vector<ProcessTerm>& root_terms);
};

// Canonical form for state identity: choice branches sorted (and duplicates
// kept), references left symbolic until stepped.
ProcessTerm canonicalize(const ProcessTerm& term);

// Least LTS closed under the prefix and choice rules, restricted to states
// reachable from the given roots. Throws ParseError if a root is unbound.
// Named roots stay symbolic reference states; deriving from explicit terms
// interns their canonical forms directly, so feeding back the states of a
// derived LTS reproduces it.
Lts derive_lts(const ProcessDefinitions& defs,
               const std::vector<std::string>& roots);
Lts derive_lts(const ProcessDefinitions& defs,
               const std::vector<ProcessTerm>& root_terms);

// The a-image of a state set: every a-successor of every member.
StateSet post_set(const Lts& lts, const StateSet& q, const Action& a);

}  // namespace spectro

#endif
