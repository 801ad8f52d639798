#ifndef SPECTRO_HML_HPP
#define SPECTRO_HML_HPP

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "spectro/ccs.hpp"
#include "spectro/lts.hpp"
#include "spectro/price.hpp"

namespace spectro {

// Immutable Hennessy-Milner logic formula: observation <a>phi, finite
// conjunction /\{...}, negation !phi. T is the empty conjunction.
//
// Structural invariants maintained by the factories:
//   - conjuncts are sorted, duplicate-free, and never conjunctions themselves
//     (flattening); /\{phi} collapses to phi, except when built by
//     with_implicit_conjunction, which produces the one-element conjunction
//     used for pricing negations.
//   - every node carries its expressiveness price, computed at construction.
class Formula {
public:
    enum class Kind { observation, conjunction, negation };

    // T, the empty conjunction.
    static Formula top();
    static Formula obs(Action action, Formula body);
    static Formula obs(Action action) { return obs(std::move(action), top()); }
    static Formula neg(Formula body);
    static Formula conj(std::vector<Formula> conjuncts);

    Kind kind() const { return node_->kind; }
    bool is_top() const {
        return kind() == Kind::conjunction && node_->conjuncts.empty();
    }
    // Exactly <a>T, a "positive flat branch" as a conjunct.
    bool is_flat_observation() const;

    const Action& action() const { return node_->action; }
    const Formula& body() const { return node_->body[0]; }
    const std::vector<Formula>& conjuncts() const { return node_->conjuncts; }

    // The raw expressiveness price (without the implicit top-level
    // conjunction around negations); see pricing.hpp for the standalone price.
    const Price& price() const { return node_->price; }

    std::size_t hash() const { return node_->hash; }
    std::size_t height() const { return node_->height; }

    bool operator==(const Formula& o) const;
    bool operator!=(const Formula& o) const { return !(*this == o); }

    // "T", "<a>!<b>", "/\{<b>, !<a>}"; one-element conjunctions print as
    // their sole conjunct.
    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        Action action;
        std::vector<Formula> body;       // observation/negation: 1 element
        std::vector<Formula> conjuncts;  // conjunction
        Price price;
        std::size_t hash;
        std::size_t height;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Node n);

    std::shared_ptr<const Node> node_;

    friend int compare(const Formula& a, const Formula& b);
    friend Formula with_implicit_conjunction(const Formula& f);
};

// Total structural order (kind, then action, then children); gives
// deterministic conjunct order and formula-set iteration.
int compare(const Formula& a, const Formula& b);

struct FormulaLess {
    bool operator()(const Formula& a, const Formula& b) const {
        return compare(a, b) < 0;
    }
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Wraps a negation into a one-element conjunction (the price of a negation
// counts the conjunction implicit around it); everything else is unchanged.
Formula with_implicit_conjunction(const Formula& f);

// Truth of f at state p, by structural recursion: an observation needs a
// matching successor satisfying the body, a conjunction needs all conjuncts,
// a negation inverts. Equivalent to the game semantics for finite formulas
// (see hml_game.hpp for the game-based oracle).
bool satisfies(const Lts& lts, StateId p, const Formula& f);

// True iff f holds at p and fails at every q in qs.
bool distinguishes(const Lts& lts, const Formula& f, StateId p,
                   const StateSet& qs);

// Parses the textual formula syntax used in tests and reports:
//   T | <a>phi | <a> | !phi | /\{phi, ...}
Formula parse_formula(std::string_view text);

}  // namespace spectro

#endif
