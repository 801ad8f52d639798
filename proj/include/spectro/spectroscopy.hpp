#ifndef SPECTRO_SPECTROSCOPY_HPP
#define SPECTRO_SPECTROSCOPY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spectro/game.hpp"
#include "spectro/lts.hpp"

namespace spectro {

// Partition of a state set: pairwise disjoint, nonempty, sorted blocks.
using Partition = std::vector<StateSet>;

// All partitions of q except the trivial one {q} itself, in the canonical
// order induced by restricted-growth enumeration. The empty set has exactly
// one partition (no blocks), which counts as nontrivial; singletons have
// none.
std::vector<Partition> nontrivial_partitions(const StateSet& q);

// Position of the spectroscopy game. The attacker tries to build a formula
// distinguishing p from every state in q; post-conjunction positions forbid
// further conjunct challenges; defender positions hold a pending partition.
struct SpecPosition {
    enum class Kind { attacker, attacker_conj, defender };

    Kind kind;
    StateId p;
    StateSet q;           // attacker / attacker_conj
    Partition partition;  // defender

    static SpecPosition attacker(StateId p, StateSet q) {
        return {Kind::attacker, p, std::move(q), {}};
    }
    static SpecPosition attacker_conj(StateId p, StateSet q) {
        return {Kind::attacker_conj, p, std::move(q), {}};
    }
    static SpecPosition defender(StateId p, Partition parts) {
        return {Kind::defender, p, {}, std::move(parts)};
    }

    bool operator<(const SpecPosition& o) const;
    bool operator==(const SpecPosition& o) const;
};

struct MoveLabel {
    enum class Kind { observation, conjunction, star, negation };
    Kind kind;
    Action action;  // observation only

    std::string to_string() const;
};

struct SpectroscopyOptions {
    // Restrict conjunct challenges to the finest partition only. This
    // reintroduces a known incompleteness (failure-trace distinctions get
    // lost) and exists purely so tests can pin the regression; never enable
    // it for real runs.
    bool finest_partitions_only = false;
};

// The part of the spectroscopy game reachable from [p0, Q0], with moves
// exactly as defined: observations step p and image Q, conjunct challenges
// pick a nontrivial partition, conjunct answers descend into blocks, and
// negation moves swap the sides of singleton positions.
class SpectroscopyGame {
public:
    const ReachabilityGame& game() const { return game_; }
    int initial() const { return initial_; }

    std::size_t position_count() const { return positions_.size(); }
    const SpecPosition& position(int id) const { return positions_[id]; }
    const MoveLabel& label(int label_id) const { return labels_[label_id]; }

    std::optional<int> find(const SpecPosition& pos) const;

    // "[p, {q1, q2}]", "[p, {q1, q2}]^", "<p, {{q1}, {q2}}>d"
    std::string position_string(int id, const Lts& lts) const;

    GameDumpLabels dump_labels(const Lts& lts) const;

private:
    ReachabilityGame game_;
    std::vector<SpecPosition> positions_;
    std::vector<MoveLabel> labels_;
    std::map<SpecPosition, int> index_;
    int initial_ = -1;

    friend SpectroscopyGame build_game(const Lts& lts, StateId p0, StateSet q0,
                                       const SpectroscopyOptions& options);
};

SpectroscopyGame build_game(const Lts& lts, StateId p0, StateSet q0,
                            const SpectroscopyOptions& options = {});

// The relation {(p, q) | [p, {q}] is a reachable position the defender wins};
// a bisimulation whenever the initial position is defender-won.
std::vector<std::pair<StateId, StateId>> extract_bisimulation(
    const SpectroscopyGame& game, const WinningRegion& region);

}  // namespace spectro

#endif
