#include "spectro/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spectro {

namespace {

bool may_be_conjunct(const Formula& f) {
    return f.kind() == Formula::Kind::observation ||
           f.kind() == Formula::Kind::negation;
}

// Exact price a conjunction over `chosen` would have (conjuncts are distinct
// formulas). Every component is monotone under adding further conjuncts, so
// the value doubles as a pruning bound for partial choices.
Price conjunction_bound(const std::vector<Formula>& chosen) {
    Price joined = Price::zero();
    Price::Component depth = 0, positive = 0, flat = 0;
    for (const Formula& c : chosen) {
        joined = joined.join(c.price());
        depth = std::max(depth, Price::succ(c.price().conjunctions()));
        if (c.kind() != Formula::Kind::negation) {
            ++positive;
            if (c.is_flat_observation()) ++flat;
        }
    }
    return joined.join(Price(0, depth, positive - flat, positive, 0, 0));
}

}  // namespace

std::vector<Formula> enumerate_formulas(const std::vector<Action>& alphabet,
                                        const EnumerationBudget& budget) {
    if (!budget.valid())
        throw std::invalid_argument("enumeration budget must be finite");

    std::vector<Formula> all{Formula::top()};
    std::vector<Formula> last_level{Formula::top()};
    std::vector<Formula> conjunct_pool;  // observations and negations so far

    auto fits = [&](const Formula& f) {
        return standalone_price(f).leq(budget.cap);
    };

    while (!last_level.empty()) {
        std::vector<Formula> next_level;
        auto add = [&](Formula f) {
            if (fits(f)) next_level.push_back(std::move(f));
        };

        for (const Formula& f : last_level) {
            for (const Action& a : alphabet) add(Formula::obs(a, f));
            if (f.kind() == Formula::Kind::observation) add(Formula::neg(f));
        }

        // Conjunctions combining at least one formula of the previous level
        // with any earlier conjuncts; the price bound prunes partial picks.
        std::size_t fresh_start = conjunct_pool.size();
        for (const Formula& f : last_level)
            if (may_be_conjunct(f)) conjunct_pool.push_back(f);

        if (budget.max_conjuncts >= 2) {
            std::vector<Formula> chosen;
            // pick conjuncts with indices increasing; require one >= fresh_start
            auto recurse = [&](auto&& self, std::size_t from, bool has_fresh) -> void {
                if (chosen.size() >= 2 && has_fresh) {
                    Formula conj = Formula::conj(chosen);
                    if (conj.kind() == Formula::Kind::conjunction) add(conj);
                }
                if (chosen.size() == budget.max_conjuncts) return;
                for (std::size_t i = from; i < conjunct_pool.size(); ++i) {
                    chosen.push_back(conjunct_pool[i]);
                    if (conjunction_bound(chosen).leq(budget.cap))
                        self(self, i + 1, has_fresh || i >= fresh_start);
                    chosen.pop_back();
                }
            };
            recurse(recurse, 0, false);
        }

        std::sort(next_level.begin(), next_level.end(), FormulaLess{});
        next_level.erase(std::unique(next_level.begin(), next_level.end()),
                         next_level.end());
        all.insert(all.end(), next_level.begin(), next_level.end());
        last_level = std::move(next_level);
    }

    std::sort(all.begin(), all.end(), FormulaLess{});
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

namespace {

// brute_force_front explores formulas per semantic class instead of per
// syntax tree: a class is a denotation (state-set bitmask) plus everything
// pricing can observe (kind, flatness, raw price). Within one class,
// formulas are interchangeable in every context the search can build, and
// every construction step is monotone in the price for a fixed denotation.
// Classes dominated at equal denotation can therefore be discarded without
// disturbing the Pareto fronts the oracle reports.

struct ClassEntry {
    Price price;
    Formula witness;
};

struct BucketKey {
    std::uint64_t denotation;
    int kind;   // Formula::Kind
    bool flat;  // exactly <a>T

    bool operator<(const BucketKey& o) const {
        if (denotation != o.denotation) return denotation < o.denotation;
        if (kind != o.kind) return kind < o.kind;
        return flat < o.flat;
    }
};

// Aggregates of a partial conjunction that determine the price of every
// completion (conjuncts themselves stay listed for materializing).
struct ConjState {
    Price join;
    Price::Component depth = 0;
    Price::Component positive = 0;
    Price::Component flat = 0;
    std::vector<Formula> chosen;  // sorted

    Price materialized_price() const {
        return join.join(Price(0, depth, positive - flat, positive, 0, 0));
    }

    // every completion of `o` is at least as expensive as one of `this`
    bool dominates(const ConjState& o) const {
        return join.leq(o.join) && depth <= o.depth && positive <= o.positive &&
               positive - flat <= o.positive - o.flat &&
               chosen.size() <= o.chosen.size();
    }
};

class SemanticSearch {
public:
    SemanticSearch(const Lts& lts, const EnumerationBudget& budget)
        : lts_(lts), budget_(budget) {
        if (lts.state_count() > 64)
            throw std::invalid_argument("oracle only supports up to 64 states");
        all_states_ = lts.state_count() == 64
                          ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << lts.state_count()) - 1;
    }

    void run() {
        add(Formula::top(), all_states_);
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = flatten();
            for (const auto& [key, entry] : snapshot) {
                for (const Action& a : lts_.alphabet())
                    grew |= add(Formula::obs(a, entry.witness),
                                obs_denotation(a, key.denotation));
                if (key.kind == static_cast<int>(Formula::Kind::observation))
                    grew |= add(Formula::neg(entry.witness),
                                all_states_ & ~key.denotation);
            }
            if (budget_.max_conjuncts >= 2) grew |= expand_conjunctions();
        }
    }

    template <typename Fn>
    void for_each_class(Fn&& fn) const {
        for (const auto& [key, entries] : buckets_)
            for (const ClassEntry& entry : entries)
                fn(key.denotation, entry.witness);
    }

private:
    std::vector<std::pair<BucketKey, ClassEntry>> flatten() const {
        std::vector<std::pair<BucketKey, ClassEntry>> out;
        for (const auto& [key, entries] : buckets_)
            for (const ClassEntry& entry : entries) out.emplace_back(key, entry);
        return out;
    }

    std::uint64_t obs_denotation(const Action& a, std::uint64_t body) const {
        std::uint64_t result = 0;
        for (StateId s = 0; s < static_cast<StateId>(lts_.state_count()); ++s)
            for (const auto& [action, target] : lts_.out(s))
                if (action == a && (body >> target & 1)) {
                    result |= std::uint64_t{1} << s;
                    break;
                }
        return result;
    }

    // insert into the bucket's Pareto set; first witness of a price wins
    bool add(const Formula& f, std::uint64_t denotation) {
        if (!standalone_price(f).leq(budget_.cap)) return false;
        const Price price = f.price();
        const BucketKey key{denotation, static_cast<int>(f.kind()),
                            f.is_flat_observation()};

        auto covered_by = [&](const BucketKey& other_key) {
            auto it = buckets_.find(other_key);
            if (it == buckets_.end()) return false;
            for (const ClassEntry& entry : it->second)
                if (entry.price.leq(price)) return true;
            return false;
        };
        if (covered_by(key)) return false;
        // a conjunction is usable wherever an equal-denotation observation
        // or plain conjunction is, so either may stand in for it
        if (key.kind == static_cast<int>(Formula::Kind::conjunction)) {
            for (bool flat : {false, true})
                if (covered_by(BucketKey{
                        denotation,
                        static_cast<int>(Formula::Kind::observation), flat}))
                    return false;
        }

        auto& entries = buckets_[key];
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [&](const ClassEntry& entry) {
                                         return price.strictly_below(entry.price);
                                     }),
                      entries.end());
        entries.push_back(ClassEntry{price, f});
        return true;
    }

    bool expand_conjunctions() {
        // conjunct pool: every observation or negation class
        std::vector<std::pair<std::uint64_t, ClassEntry>> pool;
        for (const auto& [key, entries] : buckets_)
            if (key.kind != static_cast<int>(Formula::Kind::conjunction))
                for (const ClassEntry& entry : entries)
                    pool.emplace_back(key.denotation, entry);

        bool grew = false;
        std::map<std::uint64_t, std::vector<ConjState>> states;
        states[all_states_].push_back(ConjState{});
        std::vector<std::pair<std::uint64_t, ConjState>> frontier{
            {all_states_, ConjState{}}};

        while (!frontier.empty()) {
            auto [den, state] = std::move(frontier.back());
            frontier.pop_back();
            if (state.chosen.size() == budget_.max_conjuncts) continue;

            for (const auto& [c_den, c_entry] : pool) {
                // conjuncts that do not narrow the denotation only raise the
                // price of some smaller conjunction with the same meaning
                std::uint64_t next_den = den & c_den;
                if (next_den == den) continue;
                const Formula& c = c_entry.witness;
                if (std::binary_search(state.chosen.begin(), state.chosen.end(),
                                       c, FormulaLess{}))
                    continue;

                ConjState next = state;
                next.join = next.join.join(c.price());
                next.depth = std::max(next.depth,
                                      Price::succ(c.price().conjunctions()));
                if (c.kind() != Formula::Kind::negation) {
                    ++next.positive;
                    if (c.is_flat_observation()) ++next.flat;
                }
                auto insert_at = std::lower_bound(
                    next.chosen.begin(), next.chosen.end(), c, FormulaLess{});
                next.chosen.insert(insert_at, c);
                if (!next.materialized_price().leq(budget_.cap)) continue;

                auto& bucket = states[next_den];
                bool subsumed = false;
                for (const ConjState& existing : bucket)
                    if (existing.dominates(next)) {
                        subsumed = true;
                        break;
                    }
                if (subsumed) continue;
                bucket.erase(std::remove_if(bucket.begin(), bucket.end(),
                                            [&](const ConjState& existing) {
                                                return next.dominates(existing);
                                            }),
                             bucket.end());

                if (next.chosen.size() >= 2) {
                    Formula conj = Formula::conj(next.chosen);
                    if (conj.kind() == Formula::Kind::conjunction)
                        grew |= add(conj, next_den);
                }
                bucket.push_back(next);
                frontier.emplace_back(next_den, std::move(next));
            }
        }
        return grew;
    }

    const Lts& lts_;
    const EnumerationBudget& budget_;
    std::uint64_t all_states_;
    std::map<BucketKey, std::vector<ClassEntry>> buckets_;
};

}  // namespace

std::vector<std::pair<Price, Formula>> brute_force_front(
    const Lts& lts, StateId p, StateId q, const EnumerationBudget& budget) {
    return brute_force_front(lts, p, StateSet{q}, budget);
}

std::vector<std::pair<Price, Formula>> brute_force_front(
    const Lts& lts, StateId p, const StateSet& qs,
    const EnumerationBudget& budget, std::optional<Formula::Kind> kind) {
    if (!budget.valid())
        throw std::invalid_argument("enumeration budget must be finite");

    SemanticSearch search(lts, budget);
    search.run();

    // distinguishing classes: denotation contains p but none of qs
    std::vector<std::pair<Price, Formula>> candidates;
    search.for_each_class([&](std::uint64_t denotation, const Formula& witness) {
        if (!(denotation >> p & 1)) return;
        for (StateId q : qs)
            if (denotation >> q & 1) return;
        if (kind && witness.kind() != *kind) return;
        candidates.emplace_back(standalone_price(witness), witness);
    });

    std::vector<std::pair<Price, Formula>> front;
    for (const auto& [price, witness] : candidates) {
        bool dominated = false;
        for (const auto& [other, w2] : candidates)
            if (other.strictly_below(price)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        auto it = std::find_if(front.begin(), front.end(),
                               [&](const auto& e) { return e.first == price; });
        if (it == front.end())
            front.emplace_back(price, witness);
        else if (witness.to_string() < it->second.to_string())
            it->second = witness;
    }
    std::sort(front.begin(), front.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    return front;
}

}  // namespace spectro
