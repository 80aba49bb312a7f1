#pragma once

#include "symgame/ef_game.hpp"

namespace symgame {

/// Distance-threshold duplicator for the EF game on two paths or two
/// cycles. Maintains an order-preserving partial map; with budget R and
/// threshold 2^(R-r) in round r, picks at most the threshold away from an
/// existing anchor are answered at the identical offset, far picks are
/// answered farther than the threshold from every anchor. Past the budget
/// it keeps playing best-effort with threshold 1, which still copies
/// adjacent picks exactly. Path endpoints are pre-aligned as
/// virtual anchors.
class ThresholdDuplicator : public EFDuplicator {
 public:
  enum class Shape { path, cycle };

  /// budget < 0 derives the default from n: floor(log n) - 2 on paths,
  /// floor(log n) - 1 on cycles, where n is the smaller edge count.
  explicit ThresholdDuplicator(Shape shape, int budget = -1);

  std::string name() const override;
  void begin(const Graph& g0, const Graph& g1, uint64_t seed) override;
  int choose(const EFState& state, EFMove spoiler_move) override;

  int budget() const { return budget_; }

 private:
  int reply_on_path(const EFState& state, int side, int pos, int threshold) const;
  int reply_on_cycle(const EFState& state, int side, int pos, int threshold) const;

  Shape shape_;
  int budget_param_;
  int budget_ = 0;
  // vertex id -> position along the path/cycle order, per graph
  std::vector<int> pos_[2];
  std::vector<int> vertex_at_[2];
  int len_[2] = {0, 0};  // vertex counts
};

ThresholdDuplicator duplicator_path_strategy(int n);
ThresholdDuplicator duplicator_cycle_strategy(int n);

}  // namespace symgame
