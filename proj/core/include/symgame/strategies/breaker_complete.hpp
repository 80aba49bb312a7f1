#pragma once

#include <map>

#include "symgame/game.hpp"

namespace symgame {

/// First-player strategy on K_n, n >= 6, winning within 7 moves. The
/// first three rounds build a red 3-star whose leaf-leaf edges B cannot
/// color without breaking isomorphism; the continuation follows the
/// scripted lines for the star-overlap positions that admit one and
/// otherwise plays a move proved winning by bounded search over the
/// touched part of the board.
class BreakerCompleteStrategy : public Strategy {
 public:
  /// How the blue 3-star overlaps the red one after round 3.
  enum class Position {
    shared_center,        // blue star centered on the red center
    leaves_center_two,    // fresh center; leaves = red center + two red leaves
    leaves_two_fresh,     // fresh center; leaves = two red leaves + fresh
    leaves_center_one,    // fresh center; leaves = red center + red leaf + fresh
    leaf_two_fresh,       // fresh center; leaves = red leaf + two fresh
    other,
    undetermined
  };

  std::string name() const override { return "breaker-kn"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  Position position() const { return position_; }
  int moves_made() const { return moves_made_; }
  /// True if every move so far came from the scripted lines (round 1-3
  /// construction included); false once the win-search had to take over.
  bool scripted_only() const { return scripted_only_; }

 private:
  int pick_leaf(const SymState& state, int k);
  void classify(const SymState& state);
  int scripted_move(const SymState& state, int k);
  int search_move(const SymState& state);

  const Graph* g_ = nullptr;
  int n_ = 0;
  int center_ = -1;
  std::vector<int> leaves_;
  Position position_ = Position::undetermined;
  int blue_center_ = -1;
  std::vector<int> blue_leaves_;
  int moves_made_ = 0;
  bool scripted_only_ = true;
  // script bookkeeping for the leaf_two_fresh line
  int p5_u3_ = -1, p5_v1_ = -1, p5_v2_ = -1;
};

std::string position_name(BreakerCompleteStrategy::Position p);

}  // namespace symgame
