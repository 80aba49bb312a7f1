#pragma once

#include <deque>
#include <memory>

#include "symgame/game.hpp"
#include "symgame/solver.hpp"
#include "symgame/strategies/breaker_path.hpp"

namespace symgame {

/// First-player strategy on the odd cycle with n edges. The opening
/// series builds one red component; the opponent must answer with a blue
/// twin of the same length, which splits the free edges into two arcs.
/// The longer arc then hosts the series machinery used on paths: new red
/// components of shrinking lengths force the opponent to mirror every
/// length, a pair of components whose spacing the opponent failed to
/// copy is halved down to a one-edge gap, and the merging move cannot be
/// answered. All distances count unchosen edges only, so a gap occupied
/// by either color separates components for good. Small odd n fall back
/// to the exact solver.
class BreakerCycleStrategy : public Strategy {
 public:
  explicit BreakerCycleStrategy(int n);

  std::string name() const override { return "breaker-cycle"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  const SeriesLedger& ledger() const { return ledger_; }
  int phase() const { return phase_; }
  bool used_fallback() const { return fallback_ != nullptr; }

  static constexpr int fallback_threshold = 13;

  /// Start of the second series as a 1-based position inside the longer
  /// arc (length l1, counted from the red component): the middle edge
  /// when l1 is odd, else the edge at distance (l2-1)/2 from the red
  /// component, which denies the opponent the mirror of the shorter arc.
  static int second_series_offset(int l1, int l2);

 private:
  struct Comp {
    int lo = 0, hi = 0;  // arc positions; the anchor has lo <= 0
    int length() const { return hi - lo + 1; }
  };
  struct RealComp {
    int start = 0, len = 0;  // edges start..start+len-1 mod n
  };

  int real(int pos) const;
  int arcpos(int e) const;
  RealComp to_real_comp(const Comp& c) const;

  void setup_arcs(const SymState& state);
  void plan_phase1_tail(const SymState& state);
  void plan_phase2_tail(const SymState& state);
  void finish_phase1_series(const SymState& state);
  void finish_phase2_series(const SymState& state);
  void ascend(int s);
  void swap_arcs(const SymState& state);
  void enter_phase2(const SymState& state, Comp c, Comp d);
  void start_phase2_series(const SymState& state);
  int pop_move(const SymState& state);
  int recover(const SymState& state);

  std::vector<RealComp> blue_real(const SymState& state) const;
  int comp_distance(const SymState& state, const RealComp& x,
                    const RealComp& y) const;
  bool pair_distinctive(const SymState& state, const Comp& p,
                        const Comp& q) const;
  bool scan_for_pair(const SymState& state, Comp* c, Comp* d) const;
  void check(const std::string& name, bool ok);

  int n_ = 0;
  std::unique_ptr<OptimalStrategy> fallback_;
  SeriesLedger ledger_;
  int phase_ = 0;  // 0 opening series, 1 arc series, 2 pair halving
  int t1_ = 0;
  int next_len_ = 0;
  int a_start_ = 0, a_len_ = 0;  // opening component, real edges
  int arc_start_ = 0, arc_dir_ = 1, arc_len_ = 0;
  int l1_ = 0, l2_ = 0;
  std::vector<Comp> comps_;  // tracked components in the working arc
  std::deque<int> queue_;    // planned arc positions
  bool awaiting_ = false;
  bool expect_win_ = false;
  bool swap_on_finish_ = false;
  bool case2_open_ = false;  // second series started under the even-l1 rule
  // phase 2 state
  Comp c_, d_;
  int j2_ = 0;
  bool case3_pending_ = false;
};

}  // namespace symgame
