#ifndef SPECTRO_GAME_HPP
#define SPECTRO_GAME_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace spectro {

// Gale-Stewart reachability game: finite positions partitioned between
// attacker and defender, directed moves with an opaque label. The defender
// wins infinite plays; a stuck player loses.
class ReachabilityGame {
public:
    struct Move {
        int target;
        int label;  // meaning owned by the embedding; -1 when unlabeled
    };

    int add_position(bool defender) {
        defender_.push_back(defender);
        successors_.emplace_back();
        return static_cast<int>(defender_.size()) - 1;
    }

    void add_move(int source, int target, int label = -1) {
        successors_[source].push_back(Move{target, label});
        ++move_count_;
    }

    std::size_t position_count() const { return defender_.size(); }
    std::size_t move_count() const { return move_count_; }
    bool is_defender(int g) const { return defender_[g]; }
    const std::vector<Move>& moves(int g) const { return successors_[g]; }

private:
    std::vector<bool> defender_;
    std::vector<std::vector<Move>> successors_;
    std::size_t move_count_ = 0;
};

struct WinningRegion {
    std::vector<bool> attacker_win;
    // Number of defender-option decrements performed; bounded by the number
    // of game moves.
    std::size_t decrement_ops = 0;

    bool attacker_wins(int g) const { return attacker_win[g]; }
};

// Backward propagation from positions the defender is stuck in: a position
// joins the attacker region when it is an attacker position with a winning
// move or a defender position whose options are exhausted. Linear in the
// number of moves; the recursion of the propagation step is unrolled onto an
// explicit stack.
WinningRegion compute_winning_region(const ReachabilityGame& game);

// Rendering callbacks for the dump formats.
struct GameDumpLabels {
    std::function<std::string(int)> position;  // display text per position
    std::function<std::string(int)> move;      // display text per move label
};

// Two header lines ("positions N" / "moves M"), then one line per position
// "id kind(att|def) label" and one per move "src -> dst [label]".
std::string dump_tsv(const ReachabilityGame& game, const GameDumpLabels& labels);

// Graphviz rendering; defender positions are ellipses, attacker positions
// boxes. When a region is supplied, defender-won positions are drawn red.
std::string dump_dot(const ReachabilityGame& game, const GameDumpLabels& labels,
                     const WinningRegion* region = nullptr);

}  // namespace spectro

#endif
