#include "spectro/game.hpp"

namespace spectro {

WinningRegion compute_winning_region(const ReachabilityGame& game) {
    const int n = static_cast<int>(game.position_count());

    // Predecessor lists materialized once so that the per-move work of the
    // propagation is O(1).
    std::vector<std::vector<int>> predecessors(n);
    std::vector<std::size_t> defender_options(n);
    for (int g = 0; g < n; ++g) {
        defender_options[g] = game.moves(g).size();
        for (const auto& move : game.moves(g)) predecessors[move.target].push_back(g);
    }

    WinningRegion region;
    region.attacker_win.assign(n, false);

    std::vector<int> stack;
    auto propagate = [&](int g) {
        if (region.attacker_win[g]) return;
        region.attacker_win[g] = true;
        stack.push_back(g);
        while (!stack.empty()) {
            int current = stack.back();
            stack.pop_back();
            for (int pred : predecessors[current]) {
                --defender_options[pred];
                ++region.decrement_ops;
                if (!region.attacker_win[pred] &&
                    (!game.is_defender(pred) || defender_options[pred] == 0)) {
                    region.attacker_win[pred] = true;
                    stack.push_back(pred);
                }
            }
        }
    };

    for (int g = 0; g < n; ++g)
        if (game.is_defender(g) && defender_options[g] == 0) propagate(g);

    return region;
}

std::string dump_tsv(const ReachabilityGame& game, const GameDumpLabels& labels) {
    std::string out;
    out += "positions\t" + std::to_string(game.position_count()) + "\n";
    out += "moves\t" + std::to_string(game.move_count()) + "\n";
    for (int g = 0; g < static_cast<int>(game.position_count()); ++g) {
        out += std::to_string(g);
        out += game.is_defender(g) ? "\tdef\t" : "\tatt\t";
        out += labels.position(g);
        out += '\n';
    }
    for (int g = 0; g < static_cast<int>(game.position_count()); ++g)
        for (const auto& move : game.moves(g)) {
            out += std::to_string(g) + " -> " + std::to_string(move.target);
            if (move.label >= 0) out += " [" + labels.move(move.label) + "]";
            out += '\n';
        }
    return out;
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

}  // namespace

std::string dump_dot(const ReachabilityGame& game, const GameDumpLabels& labels,
                     const WinningRegion* region) {
    std::string out = "digraph game {\n";
    for (int g = 0; g < static_cast<int>(game.position_count()); ++g) {
        out += "  n" + std::to_string(g) + " [label=\"" +
               dot_escape(labels.position(g)) + "\", shape=" +
               (game.is_defender(g) ? "ellipse" : "box");
        if (region)
            out += region->attacker_wins(g) ? ", color=black" : ", color=red";
        out += "];\n";
    }
    for (int g = 0; g < static_cast<int>(game.position_count()); ++g)
        for (const auto& move : game.moves(g)) {
            out += "  n" + std::to_string(g) + " -> n" + std::to_string(move.target);
            if (move.label >= 0)
                out += " [label=\"" + dot_escape(labels.move(move.label)) + "\"]";
            out += ";\n";
        }
    out += "}\n";
    return out;
}

}  // namespace spectro
