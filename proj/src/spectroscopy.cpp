#include "spectro/spectroscopy.hpp"

#include <algorithm>
#include <deque>

namespace spectro {

std::vector<Partition> nontrivial_partitions(const StateSet& q) {
    const std::size_t n = q.size();
    if (n == 0) return {Partition{}};
    if (n == 1) return {};

    std::vector<Partition> result;
    // Restricted-growth strings: assignment[i] is the block of q[i], and a
    // new block index may exceed the previous maximum by at most one. Blocks
    // come out ordered by smallest member.
    std::vector<std::size_t> assignment(n, 0);
    while (true) {
        std::size_t block_count =
            *std::max_element(assignment.begin(), assignment.end()) + 1;
        if (block_count > 1) {  // skip the trivial single-block partition
            Partition parts(block_count);
            for (std::size_t i = 0; i < n; ++i) parts[assignment[i]].push_back(q[i]);
            result.push_back(std::move(parts));
        }
        // advance to the next restricted-growth string
        std::size_t i = n;
        while (i-- > 1) {
            std::size_t max_before = 0;
            for (std::size_t j = 0; j < i; ++j)
                max_before = std::max(max_before, assignment[j]);
            if (assignment[i] <= max_before) {
                ++assignment[i];
                std::fill(assignment.begin() + i + 1, assignment.end(), 0);
                break;
            }
            assignment[i] = 0;
        }
        if (i == 0) break;
    }
    return result;
}

bool SpecPosition::operator<(const SpecPosition& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (p != o.p) return p < o.p;
    if (q != o.q) return q < o.q;
    return partition < o.partition;
}

bool SpecPosition::operator==(const SpecPosition& o) const {
    return kind == o.kind && p == o.p && q == o.q && partition == o.partition;
}

std::string MoveLabel::to_string() const {
    switch (kind) {
        case Kind::observation: return "<" + action.name() + ">";
        case Kind::conjunction: return "/\\";
        case Kind::star: return "*";
        case Kind::negation: return "!";
    }
    return "?";
}

SpectroscopyGame build_game(const Lts& lts, StateId p0, StateSet q0,
                            const SpectroscopyOptions& options) {
    SpectroscopyGame result;
    std::deque<int> frontier;

    auto intern = [&](SpecPosition pos) {
        auto it = result.index_.find(pos);
        if (it != result.index_.end()) return it->second;
        int id = result.game_.add_position(pos.kind == SpecPosition::Kind::defender);
        result.index_.emplace(pos, id);
        result.positions_.push_back(std::move(pos));
        frontier.push_back(id);
        return id;
    };

    auto label_id = [&](MoveLabel label) {
        result.labels_.push_back(std::move(label));
        return static_cast<int>(result.labels_.size()) - 1;
    };

    result.initial_ = intern(SpecPosition::attacker(p0, std::move(q0)));

    while (!frontier.empty()) {
        int id = frontier.front();
        frontier.pop_front();
        const SpecPosition pos = result.positions_[id];

        if (pos.kind == SpecPosition::Kind::defender) {
            // conjunct answers: one move per block
            for (const StateSet& block : pos.partition) {
                int target = block.size() == 1
                                 ? intern(SpecPosition::attacker(pos.p, block))
                                 : intern(SpecPosition::attacker_conj(pos.p, block));
                result.game_.add_move(
                    id, target, label_id({MoveLabel::Kind::star, {}}));
            }
            continue;
        }

        // observation moves (shared by both attacker position kinds)
        for (const auto& [action, p_next] : lts.out(pos.p)) {
            int target = intern(
                SpecPosition::attacker(p_next, post_set(lts, pos.q, action)));
            result.game_.add_move(
                id, target, label_id({MoveLabel::Kind::observation, action}));
        }

        if (pos.kind != SpecPosition::Kind::attacker) continue;

        // conjunct challenges
        if (options.finest_partitions_only) {
            // Known-incomplete variant: only the all-singletons partition.
            if (pos.q.size() >= 2 || pos.q.empty()) {
                Partition finest;
                for (StateId s : pos.q) finest.push_back(StateSet{s});
                int target = intern(SpecPosition::defender(pos.p, std::move(finest)));
                result.game_.add_move(
                    id, target, label_id({MoveLabel::Kind::conjunction, {}}));
            }
        } else {
            for (Partition& parts : nontrivial_partitions(pos.q)) {
                int target = intern(SpecPosition::defender(pos.p, std::move(parts)));
                result.game_.add_move(
                    id, target, label_id({MoveLabel::Kind::conjunction, {}}));
            }
        }

        // negation move between singleton positions
        if (pos.q.size() == 1) {
            int target =
                intern(SpecPosition::attacker(pos.q.front(), StateSet{pos.p}));
            result.game_.add_move(id, target,
                                  label_id({MoveLabel::Kind::negation, {}}));
        }
    }
    return result;
}

std::optional<int> SpectroscopyGame::find(const SpecPosition& pos) const {
    auto it = index_.find(pos);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

std::string state_set_string(const StateSet& set, const Lts& lts) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += lts.state_name(set[i]);
    }
    out += '}';
    return out;
}

}  // namespace

std::string SpectroscopyGame::position_string(int id, const Lts& lts) const {
    const SpecPosition& pos = positions_[id];
    switch (pos.kind) {
        case SpecPosition::Kind::attacker:
            return "[" + lts.state_name(pos.p) + ", " +
                   state_set_string(pos.q, lts) + "]";
        case SpecPosition::Kind::attacker_conj:
            return "[" + lts.state_name(pos.p) + ", " +
                   state_set_string(pos.q, lts) + "]^";
        case SpecPosition::Kind::defender: {
            std::string out = "<" + lts.state_name(pos.p) + ", {";
            for (std::size_t i = 0; i < pos.partition.size(); ++i) {
                if (i) out += ", ";
                out += state_set_string(pos.partition[i], lts);
            }
            out += "}>d";
            return out;
        }
    }
    return {};
}

GameDumpLabels SpectroscopyGame::dump_labels(const Lts& lts) const {
    GameDumpLabels labels;
    labels.position = [this, &lts](int id) { return position_string(id, lts); };
    labels.move = [this](int id) { return labels_[id].to_string(); };
    return labels;
}

std::vector<std::pair<StateId, StateId>> extract_bisimulation(
    const SpectroscopyGame& game, const WinningRegion& region) {
    std::vector<std::pair<StateId, StateId>> relation;
    for (int id = 0; id < static_cast<int>(game.position_count()); ++id) {
        const SpecPosition& pos = game.position(id);
        if (pos.kind == SpecPosition::Kind::attacker && pos.q.size() == 1 &&
            !region.attacker_wins(id))
            relation.emplace_back(pos.p, pos.q.front());
    }
    std::sort(relation.begin(), relation.end());
    return relation;
}

}  // namespace spectro
