#include "spectro/pricing.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectro {

const char* notion_label(Notion x) {
    switch (x) {
        case Notion::E: return "E";
        case Notion::T: return "T";
        case Notion::F: return "F";
        case Notion::R: return "R";
        case Notion::FT: return "FT";
        case Notion::RT: return "RT";
        case Notion::IF: return "IF";
        case Notion::PF: return "PF";
        case Notion::S1: return "S1";
        case Notion::RS: return "RS";
        case Notion::S2: return "S2";
        case Notion::S3: return "S3";
        case Notion::B: return "B";
    }
    return "?";
}

const char* notion_long_name(Notion x) {
    switch (x) {
        case Notion::E: return "enabledness";
        case Notion::T: return "traces";
        case Notion::F: return "failures";
        case Notion::R: return "readiness";
        case Notion::FT: return "failure traces";
        case Notion::RT: return "ready traces";
        case Notion::IF: return "impossible futures";
        case Notion::PF: return "possible futures";
        case Notion::S1: return "simulation";
        case Notion::RS: return "ready simulation";
        case Notion::S2: return "2-nested simulation";
        case Notion::S3: return "3-nested simulation";
        case Notion::B: return "bisimulation";
    }
    return "?";
}

std::vector<Notion> notion_set(bool with_s3) {
    std::vector<Notion> set{Notion::E,  Notion::T,  Notion::F,  Notion::R,
                            Notion::FT, Notion::RT, Notion::IF, Notion::PF,
                            Notion::S1, Notion::RS, Notion::S2};
    if (with_s3) set.push_back(Notion::S3);
    set.push_back(Notion::B);
    return set;
}

Price expressiveness_price(const Formula& f) { return f.price(); }

Price standalone_price(const Formula& f) {
    return with_implicit_conjunction(f).price();
}

Price nested_simulation_budget(unsigned n) {
    if (n == 0) throw std::invalid_argument("nested simulation depth must be >= 1");
    constexpr auto inf = Price::infinity;
    // With no negations allowed (n = 1), no observation can sit under one
    // either, so the sixth bound tightens to 0. Membership is unchanged
    // (positive dimension-6 prices force a positive dimension 5), but only
    // the tight bound keeps the budget order aligned with the spectrum.
    if (n == 1) return Price(inf, inf, inf, inf, 0, 0);
    return Price(inf, inf, inf, inf, n - 1, inf);
}

Price budget(Notion x) {
    constexpr auto inf = Price::infinity;
    switch (x) {
        case Notion::E: return Price(1, 0, 0, 0, 0, 0);
        case Notion::T: return Price(inf, 0, 0, 0, 0, 0);
        case Notion::F: return Price(inf, 1, 0, 0, 1, 1);
        case Notion::R: return Price(inf, 1, 0, inf, 1, 1);
        case Notion::FT: return Price(inf, inf, 1, 1, 1, 1);
        case Notion::RT: return Price(inf, inf, 1, inf, 1, 1);
        case Notion::IF: return Price(inf, 1, 0, 0, 1, inf);
        case Notion::PF: return Price(inf, 1, inf, inf, 1, inf);
        case Notion::RS: return Price(inf, inf, inf, inf, 1, 1);
        case Notion::S1: return nested_simulation_budget(1);
        case Notion::S2: return nested_simulation_budget(2);
        case Notion::S3: return nested_simulation_budget(3);
        case Notion::B: return Price(inf, inf, inf, inf, inf, inf);
    }
    return Price::zero();
}

bool in_language(const Formula& f, Notion x) {
    return standalone_price(f).leq(budget(x));
}

std::vector<std::pair<Price, Formula>> minimal_prices(
    const std::vector<Formula>& formulas) {
    std::vector<std::pair<Price, Formula>> priced;
    priced.reserve(formulas.size());
    for (const Formula& f : formulas) priced.emplace_back(standalone_price(f), f);

    std::vector<std::pair<Price, Formula>> front;
    for (const auto& [price, formula] : priced) {
        bool dominated = false;
        for (const auto& [other, unused] : priced)
            if (other.strictly_below(price)) {
                dominated = true;
                break;
            }
        if (dominated) continue;
        auto it = std::find_if(front.begin(), front.end(),
                               [&](const auto& e) { return e.first == price; });
        if (it == front.end()) {
            front.emplace_back(price, formula);
        } else if (formula.to_string() < it->second.to_string()) {
            it->second = formula;
        }
    }
    std::sort(front.begin(), front.end(),
              [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
    return front;
}

std::vector<std::pair<Notion, Notion>> spectrum_edges(bool with_s3) {
    using N = Notion;
    std::vector<std::pair<Notion, Notion>> edges{
        {N::S2, N::RS}, {N::S2, N::PF}, {N::RS, N::RT}, {N::RS, N::S1},
        {N::RT, N::FT}, {N::RT, N::R},  {N::PF, N::R},  {N::PF, N::IF},
        {N::S1, N::T},  {N::FT, N::F},  {N::R, N::F},   {N::IF, N::F},
        {N::F, N::T},   {N::T, N::E}};
    if (with_s3) {
        edges.push_back({N::B, N::S3});
        edges.push_back({N::S3, N::S2});
    } else {
        edges.push_back({N::B, N::S2});
    }
    return edges;
}

namespace {

// finer_than[x][y]: notion x lies strictly above y (x reaches y along edges).
std::vector<std::vector<bool>> reachability(const std::vector<Notion>& set,
                                            bool with_s3) {
    auto index = [&](Notion x) {
        return std::find(set.begin(), set.end(), x) - set.begin();
    };
    const std::size_t n = set.size();
    std::vector<std::vector<bool>> finer(n, std::vector<bool>(n, false));
    for (const auto& [from, to] : spectrum_edges(with_s3))
        finer[index(from)][index(to)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (finer[i][k] && finer[k][j]) finer[i][j] = true;
    return finer;
}

}  // namespace

Verdict classify(const std::vector<Price>& front, bool with_s3) {
    const std::vector<Notion> set = notion_set(with_s3);
    const auto finer = reachability(set, with_s3);

    Verdict verdict;
    std::vector<bool> is_distinguished(set.size(), false);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Price bound = budget(set[i]);
        for (const Price& m : front)
            if (m.leq(bound)) {
                is_distinguished[i] = true;
                break;
            }
        if (is_distinguished[i])
            verdict.distinguished.push_back(set[i]);
        else
            verdict.preordered.push_back(set[i]);
    }

    for (std::size_t i = 0; i < set.size(); ++i) {
        if (is_distinguished[i]) {
            // coarsest: no strictly coarser notion is distinguished
            bool minimal = true;
            for (std::size_t j = 0; j < set.size(); ++j)
                if (is_distinguished[j] && finer[i][j]) {
                    minimal = false;
                    break;
                }
            if (minimal) verdict.coarsest_distinguishing.push_back(set[i]);
        } else {
            // finest: no strictly finer notion is preordered
            bool maximal = true;
            for (std::size_t j = 0; j < set.size(); ++j)
                if (!is_distinguished[j] && finer[j][i]) {
                    maximal = false;
                    break;
                }
            if (maximal) verdict.finest_preorders.push_back(set[i]);
        }
    }
    return verdict;
}

}  // namespace spectro
