#pragma once

#include <deque>
#include <map>
#include <memory>

#include "symgame/game.hpp"
#include "symgame/solver.hpp"

namespace symgame {

/// One series of first-player moves on a path, in normalized coordinates
/// where edges are numbered 1..n from the end the opponent avoided in
/// round one. s and f are the first and last edges of the series; for
/// descending series s > f.
struct SeriesRecord {
  int index = 0;
  int phase = 1;
  std::string label;  // first, p1c1-rule1/2/3, p1c2, push, p2c1, p2c2, p2c3, last
  int s = 0;
  int f = 0;
  int length = 0;
  int b_first = -1;    // opponent's first edge in the series
  int dist_prev = -1;  // distance to the previous component, when defined
  /// Named invariant evaluations recorded for this series. Every value
  /// is expected to be true; a false value is a falsified guarantee.
  std::map<std::string, bool> checks;
};

struct SeriesLedger {
  int n = 0;
  int t = 0;
  bool flipped = false;
  bool strict = false;  // n > 14t, the regime the round-count analysis assumes
  std::vector<SeriesRecord> series;
  std::vector<std::string> notes;
  std::string to_json() const;
};

/// Raised when play falsifies an invariant the strategy's guarantee rests
/// on. Carries the full ledger for post-mortem.
class BreakerInvariantError : public std::runtime_error {
 public:
  BreakerInvariantError(const std::string& what, std::string ledger_json);
  const std::string& ledger_json() const { return ledger_json_; }

 private:
  std::string ledger_json_;
};

int breaker_t(int n);             // series-length parameter 4*ceil(log n) + 22
int breaker_phi(int n, int x);    // x + ceil((n - x) / 2)

/// First-player strategy on the odd path with n edges. Moves are grouped
/// into series, each building a new red component; Phase 1 manufactures a
/// pair of components whose spacing the opponent failed to replicate,
/// Phase 2 halves the gap inside that pair down to a single edge, and the
/// final move merges the pair, which the opponent cannot copy. Small odd
/// n fall back to the exact solver.
class BreakerPathStrategy : public Strategy {
 public:
  explicit BreakerPathStrategy(int n);

  std::string name() const override { return "breaker-path"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  const SeriesLedger& ledger() const { return ledger_; }
  int phase() const { return phase_; }
  bool used_fallback() const { return fallback_ != nullptr; }

  static constexpr int fallback_threshold = 13;

 private:
  struct Comp {
    int lo = 0, hi = 0;
    int series = 0;  // 1-based index into ledger_.series
    int length() const { return hi - lo + 1; }
  };

  int to_real(int pos) const { return ledger_.flipped ? n_ - pos : pos - 1; }
  int from_real(int e) const { return ledger_.flipped ? n_ - e : e + 1; }

  int pop_move(const SymState& state);
  void plan_phase1_tail(const SymState& state);
  void plan_phase2_tail(const SymState& state);
  void finish_phase1_series(const SymState& state);
  void finish_phase2_series(const SymState& state);
  void start_phase1_series(const SymState& state);
  void start_phase2_series(const SymState& state);
  void enter_phase2(const SymState& state, Comp c, Comp d);
  int recover(const SymState& state);

  std::vector<Comp> blue_comps(const SymState& state) const;
  Comp blue_of(const SymState& state, int series_index) const;
  bool pair_distinctive(const SymState& state, const Comp& p, const Comp& q) const;
  bool condition4(const SymState& state, int m, int* q_out) const;
  void record_conditions(const SymState& state, int m);
  void check(const std::string& name, bool ok);

  int n_ = 0;
  std::unique_ptr<OptimalStrategy> fallback_;
  SeriesLedger ledger_;
  int phase_ = 1;
  std::vector<Comp> reds_;      // one per series, creation order
  std::vector<int> b_first_;    // 1-based by series, normalized
  std::deque<int> queue_;       // planned normalized edges
  bool awaiting_case_ = false;  // series head played, tail depends on reply
  bool flip_pending_ = false;
  bool expect_win_ = false;     // opponent argued dead; next call means not
  // phase 2 state
  Comp c_, d_;
  int tprime_ = 0;
  int j2_ = 0;
  bool case3_pending_ = false;  // pair chosen from blue data at series end
};

}  // namespace symgame
