#ifndef SPECTRO_PRICE_HPP
#define SPECTRO_PRICE_HPP

#include <array>
#include <cstdint>
#include <string>

namespace spectro {

// A point in the six-dimensional expressiveness lattice (N ∪ {inf})^6.
// Dimensions, in order:
//   1. observation depth
//   2. conjunction depth (negations count as implicit conjunctions)
//   3. positive deep branches per conjunction
//   4. positive branches per conjunction
//   5. negation depth
//   6. observation depth under negations
// The order is componentwise; join is componentwise max.
class Price {
public:
    using Component = std::uint32_t;
    static constexpr Component infinity = ~Component{0};

    constexpr Price() : v_{} {}
    constexpr Price(Component observations, Component conjunctions,
                    Component positive_deep_branches, Component positive_branches,
                    Component negations, Component negated_observations)
        : v_{observations, conjunctions, positive_deep_branches,
             positive_branches, negations, negated_observations} {}

    static constexpr Price zero() { return Price{}; }

    constexpr Component observations() const { return v_[0]; }
    constexpr Component conjunctions() const { return v_[1]; }
    constexpr Component positive_deep_branches() const { return v_[2]; }
    constexpr Component positive_branches() const { return v_[3]; }
    constexpr Component negations() const { return v_[4]; }
    constexpr Component negated_observations() const { return v_[5]; }

    constexpr Component operator[](int dim) const { return v_[dim]; }

    constexpr bool operator==(const Price& o) const { return v_ == o.v_; }
    constexpr bool operator!=(const Price& o) const { return v_ != o.v_; }

    // Componentwise <= (the lattice order).
    constexpr bool leq(const Price& o) const {
        for (int i = 0; i < 6; ++i)
            if (v_[i] > o.v_[i]) return false;
        return true;
    }

    constexpr bool strictly_below(const Price& o) const {
        return leq(o) && v_ != o.v_;
    }

    constexpr Price join(const Price& o) const {
        Price r;
        for (int i = 0; i < 6; ++i) r.v_[i] = v_[i] > o.v_[i] ? v_[i] : o.v_[i];
        return r;
    }

    // Saturating +1 on one component; infinity absorbs.
    static constexpr Component succ(Component c) {
        return c == infinity ? infinity : c + 1;
    }

    constexpr bool all_finite() const {
        for (Component c : v_)
            if (c == infinity) return false;
        return true;
    }

    // Lexicographic order, used only for deterministic reporting.
    constexpr bool lex_less(const Price& o) const { return v_ < o.v_; }

    // "(2,1,0,0,1,1)"; infinite components render via inf_symbol.
    std::string to_string(const char* inf_symbol = "inf") const;

private:
    std::array<Component, 6> v_;
};

inline constexpr Price::Component price_inf = Price::infinity;

bool price_leq(const Price& a, const Price& b);
bool price_lt(const Price& a, const Price& b);
Price price_join(const Price& a, const Price& b);

}  // namespace spectro

#endif
