#ifndef SPECTRO_PRICING_HPP
#define SPECTRO_PRICING_HPP

#include <string>
#include <vector>

#include "spectro/hml.hpp"
#include "spectro/price.hpp"

namespace spectro {

// The behavioral preorders/equivalences reported by the tool. S1/S2/S3 are
// the 1-/2-/3-nested simulations (S1 = plain simulation); S3 only
// participates when explicitly enabled.
enum class Notion {
    E,   // enabledness
    T,   // traces
    F,   // failures
    R,   // readiness
    FT,  // failure traces
    RT,  // ready traces
    IF,  // impossible futures
    PF,  // possible futures
    S1,  // simulation
    RS,  // ready simulation
    S2,  // 2-nested simulation
    S3,  // 3-nested simulation
    B,   // bisimulation
};

const char* notion_label(Notion x);       // "FT"
const char* notion_long_name(Notion x);   // "failure traces"

// The fixed reporting set, in coarse-to-fine display order.
std::vector<Notion> notion_set(bool with_s3);

// Expressiveness price per the six-dimensional metric; the price of a
// standalone formula counts the implicit conjunction around a top-level
// negation.
Price expressiveness_price(const Formula& f);
Price standalone_price(const Formula& f);

// Least upper bound of the prices of all formulas in the notion's
// observation language.
Price budget(Notion x);

// Budget of n-nested simulation for any n >= 1 (n = 1 is plain simulation).
Price nested_simulation_budget(unsigned n);

// Membership of a formula in the notion's observation language, decided by
// price comparison.
bool in_language(const Formula& f, Notion x);

// Pareto front of standalone prices over a formula set, one witness per
// front price. Witnesses are the lexicographically smallest printed formula
// of their price class; results are sorted by price for stable output.
std::vector<std::pair<Price, Formula>> minimal_prices(
    const std::vector<Formula>& formulas);

// Edges of the spectrum order, finer notion -> coarser notion.
std::vector<std::pair<Notion, Notion>> spectrum_edges(bool with_s3);

struct Verdict {
    std::vector<Notion> distinguished;
    std::vector<Notion> preordered;
    std::vector<Notion> coarsest_distinguishing;
    std::vector<Notion> finest_preorders;
};

// Splits the notion set against a Pareto front of distinguishing prices:
// a notion is distinguished when some front price fits its budget, preordered
// otherwise. Coarsest distinguishing notions are the minimal distinguished
// ones in the spectrum order, finest preorders the maximal preordered ones.
Verdict classify(const std::vector<Price>& front, bool with_s3 = false);

}  // namespace spectro

#endif
