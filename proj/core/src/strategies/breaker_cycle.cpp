#include "symgame/strategies/breaker_cycle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>

namespace symgame {

namespace {

int ceil_log2(int n) { return std::bit_width(static_cast<unsigned>(n - 1)); }

// run-length multiset of one color around the cycle, with one extra edge
// treated as colored; determines the isomorphism type of the subgraph
std::vector<int> cyc_runs(const SymState& st, const EdgeSet& set, int extra,
                          int n) {
  int anchor = -1;
  for (int e = 0; e < n; ++e)
    if (!set.contains(e) && e != extra) {
      anchor = e;
      break;
    }
  std::vector<int> out;
  if (anchor < 0) return out;
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    int e = (anchor + i) % n;
    if (set.contains(e) || e == extra) {
      ++run;
    } else if (run) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run) out.push_back(run);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> col_runs(const std::vector<char>& col, char c) {
  int n = static_cast<int>(col.size());
  int anchor = -1;
  for (int e = 0; e < n; ++e)
    if (col[e] != c) {
      anchor = e;
      break;
    }
  std::vector<int> out;
  if (anchor < 0) return out;
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    int e = (anchor + i) % n;
    if (col[e] == c) {
      ++run;
    } else if (run) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run) out.push_back(run);
  std::sort(out.begin(), out.end());
  return out;
}

// exact endgame: does the mover (red) force the opponent into a position
// with no isomorphism-preserving reply while free edges remain
bool forces_win(std::vector<char>& col, int free_cnt) {
  int n = static_cast<int>(col.size());
  for (int e = 0; e < n; ++e) {
    if (col[e]) continue;
    col[e] = 'r';
    std::vector<int> red = col_runs(col, 'r');
    bool all_lose = true;
    bool any_reply = false;
    for (int r = 0; r < n && all_lose; ++r) {
      if (col[r]) continue;
      col[r] = 'b';
      if (col_runs(col, 'b') == red) {
        any_reply = true;
        if (free_cnt - 2 == 0 || !forces_win(col, free_cnt - 2))
          all_lose = false;
      }
      col[r] = 0;
    }
    col[e] = 0;
    if (!any_reply && free_cnt > 1) return true;
    if (any_reply && all_lose) return true;
  }
  return false;
}

int endgame_move(const SymState& state, int n) {
  std::vector<char> col(n, 0);
  int free_cnt = 0;
  for (int e = 0; e < n; ++e) {
    if (state.red.contains(e))
      col[e] = 'r';
    else if (state.blue.contains(e))
      col[e] = 'b';
    else
      ++free_cnt;
  }
  for (int e = 0; e < n; ++e) {
    if (col[e]) continue;
    col[e] = 'r';
    std::vector<int> red = col_runs(col, 'r');
    bool all_lose = true;
    bool any_reply = false;
    for (int r = 0; r < n && all_lose; ++r) {
      if (col[r]) continue;
      col[r] = 'b';
      if (col_runs(col, 'b') == red) {
        any_reply = true;
        if (free_cnt - 2 == 0 || !forces_win(col, free_cnt - 2))
          all_lose = false;
      }
      col[r] = 0;
    }
    col[e] = 0;
    if ((!any_reply && free_cnt > 1) || (any_reply && all_lose)) return e;
  }
  return -1;
}

}  // namespace

int BreakerCycleStrategy::second_series_offset(int l1, int l2) {
  if (l1 % 2 == 1) return (l1 + 1) / 2;
  // l1 even forces l2 odd >= 1; playing the off-center edge denies the
  // opponent the mirror image of the shorter arc
  return std::max(2, (l2 - 1) / 2 + 1);
}

BreakerCycleStrategy::BreakerCycleStrategy(int n) : n_(n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("breaker-cycle: odd edge count required");
}

void BreakerCycleStrategy::begin(const Graph& g, Player side, Variant variant,
                                 uint64_t seed) {
  if (side != Player::A)
    throw std::invalid_argument("breaker-cycle: first-player strategy only");
  if (g.family() != Family::cycle || g.edge_count() != n_)
    throw std::invalid_argument("breaker-cycle: bound to the cycle with " +
                                std::to_string(n_) + " edges");
  ledger_ = SeriesLedger{};
  ledger_.n = n_;
  // opening length capped so the longer arc can host the later series
  t1_ = std::min(breaker_t(n_), std::max(2, (n_ + 4) / 6));
  ledger_.t = t1_;
  if (t1_ < breaker_t(n_))
    ledger_.notes.push_back("opening length capped at (n+4)/6");
  ledger_.strict = false;
  phase_ = 0;
  next_len_ = 0;
  a_start_ = a_len_ = 0;
  arc_start_ = arc_len_ = l1_ = l2_ = 0;
  arc_dir_ = 1;
  comps_.clear();
  queue_.clear();
  awaiting_ = expect_win_ = swap_on_finish_ = case2_open_ = false;
  case3_pending_ = false;
  j2_ = 0;
  fallback_.reset();
  if (n_ <= fallback_threshold) {
    fallback_ = std::make_unique<OptimalStrategy>(
        std::make_shared<SymSolver>(g, variant), Player::A);
    fallback_->begin(g, side, variant, seed);
  }
}

void BreakerCycleStrategy::check(const std::string& name, bool ok) {
  ledger_.series.back().checks[name] = ok;
  if (!ok)
    throw BreakerInvariantError("breaker-cycle invariant failed: " + name,
                                ledger_.to_json());
}

int BreakerCycleStrategy::real(int pos) const {
  int e = arc_start_ + arc_dir_ * (pos - 1);
  return ((e % n_) + n_) % n_;
}

int BreakerCycleStrategy::arcpos(int e) const {
  int diff = ((e - arc_start_) * arc_dir_ % n_ + n_) % n_;
  int pos = diff + 1;
  return pos >= 1 && pos <= arc_len_ ? pos : -1;
}

BreakerCycleStrategy::RealComp BreakerCycleStrategy::to_real_comp(
    const Comp& c) const {
  int fwd = arc_dir_ == 1 ? real(c.lo) : real(c.hi);
  return {fwd, c.length()};
}

std::vector<BreakerCycleStrategy::RealComp> BreakerCycleStrategy::blue_real(
    const SymState& state) const {
  std::vector<RealComp> out;
  for (const Component& c :
       ComponentView::of(*state.graph, state.blue).components) {
    int start = c.edges.front();
    for (int e : c.edges)
      if (!state.blue.contains((e - 1 + n_) % n_)) start = e;
    out.push_back({start, c.size()});
  }
  return out;
}

int BreakerCycleStrategy::comp_distance(const SymState& state,
                                        const RealComp& x,
                                        const RealComp& y) const {
  auto gap = [&](const RealComp& a, const RealComp& b) {
    int from = (a.start + a.len) % n_;
    int len = ((b.start - from) % n_ + n_) % n_;
    for (int i = 0; i < len; ++i)
      if (state.colored((from + i) % n_)) return INT_MAX;
    return len == 0 ? INT_MAX : len;
  };
  return std::min(gap(x, y), gap(y, x));
}

bool BreakerCycleStrategy::pair_distinctive(const SymState& state,
                                            const Comp& p,
                                            const Comp& q) const {
  Comp a = p, b = q;
  if (a.lo > b.lo) std::swap(a, b);
  int d = b.lo - a.hi - 1;
  if (d < 1 || d == 2) return false;
  for (int e = a.hi + 1; e < b.lo; ++e)
    if (state.colored(real(e))) return false;
  // every blue pair with the matching lengths must sit at a different
  // unchosen distance, otherwise the opponent can copy the merge
  std::vector<RealComp> blues = blue_real(state);
  for (const RealComp& bp : blues)
    for (const RealComp& bq : blues) {
      if (&bp == &bq) continue;
      if (bp.len != a.length() || bq.len != b.length()) continue;
      if (comp_distance(state, bp, bq) == d) return false;
    }
  return true;
}

bool BreakerCycleStrategy::scan_for_pair(const SymState& state, Comp* c,
                                         Comp* d) const {
  int best_gap = INT_MAX;
  int m = static_cast<int>(comps_.size());
  for (int i = 0; i < m; ++i)
    for (int k = i + 1; k < m; ++k) {
      Comp a = comps_[i], b = comps_[k];
      if (a.lo > b.lo) std::swap(a, b);
      int gap = b.lo - a.hi - 1;
      if (gap < 1 || gap == 2 || gap >= best_gap) continue;
      if (!pair_distinctive(state, a, b)) continue;
      *c = a;
      *d = b;
      best_gap = gap;
    }
  return best_gap != INT_MAX;
}

int BreakerCycleStrategy::pop_move(const SymState& state) {
  int pos = queue_.front();
  queue_.pop_front();
  int e = real(pos);
  if (state.colored(e)) {
    // defensive: the plan ran into an occupied edge; close the series
    ledger_.notes.push_back("plan blocked at arc position " +
                            std::to_string(pos));
    queue_.clear();
    return -1;
  }
  Comp& cur = comps_.back();
  cur.lo = std::min(cur.lo, pos);
  cur.hi = std::max(cur.hi, pos);
  SeriesRecord& rec = ledger_.series.back();
  rec.f = pos;
  rec.length = cur.length();
  return e;
}

int BreakerCycleStrategy::choose(const SymState& state) {
  if (fallback_) return fallback_->choose(state);

  if (state.round == 0 && state.history.empty()) {
    ledger_.series.push_back({1, 1, "opening", 1, 1, 1, -1, -1, {}});
    a_start_ = 0;
    a_len_ = 1;
    return 0;
  }
  // once the board thins out, exact play takes precedence over the plan
  int free_cnt = 0;
  for (int e = 0; e < n_; ++e)
    if (!state.colored(e)) ++free_cnt;
  if (free_cnt <= 64 && state.round > 0) {
    std::vector<int> free;
    for (int e = 0; e < n_; ++e)
      if (!state.colored(e)) free.push_back(e);
    for (int e : free) {
      std::vector<int> red = cyc_runs(state, state.red, e, n_);
      bool answered = false;
      for (int e2 : free) {
        if (e2 == e) continue;
        if (cyc_runs(state, state.blue, e2, n_) == red) {
          answered = true;
          break;
        }
      }
      if (!answered && free_cnt > 1) {
        ledger_.notes.push_back("kill at round " +
                                std::to_string(state.round + 1));
        return e;
      }
    }
    if (free_cnt <= 12) {
      int e = endgame_move(state, n_);
      if (e >= 0) {
        ledger_.notes.push_back("endgame search at round " +
                                std::to_string(state.round + 1));
        return e;
      }
    }
  }
  if (phase_ == 0) {
    if (a_len_ < t1_) {
      // grow the opening component at a free end; the single blue twin
      // cannot block both
      int hi = (a_start_ + a_len_) % n_;
      int lo = (a_start_ - 1 + n_) % n_;
      int e;
      if (!state.colored(hi)) {
        e = hi;
      } else {
        e = lo;
        a_start_ = lo;
      }
      ++a_len_;
      ledger_.series.back().length = a_len_;
      return e;
    }
    setup_arcs(state);
  }
  while (queue_.empty()) {
    if (awaiting_) {
      awaiting_ = false;
      int sp = arcpos(state.history.back());
      ledger_.series.back().b_first = sp;
      if (phase_ == 1)
        plan_phase1_tail(state);
      else
        plan_phase2_tail(state);
      continue;
    }
    if (expect_win_) return recover(state);
    if (phase_ == 1)
      finish_phase1_series(state);
    else
      finish_phase2_series(state);
    if (expect_win_ && queue_.empty()) return recover(state);
  }
  int e = pop_move(state);
  return e >= 0 ? e : choose(state);
}

void BreakerCycleStrategy::setup_arcs(const SymState& state) {
  std::vector<RealComp> blues = blue_real(state);
  RealComp twin = blues.front();
  int fwd = (a_start_ + a_len_) % n_;
  int gap_fwd = ((twin.start - fwd) % n_ + n_) % n_;
  int gap_bwd = n_ - a_len_ - twin.len - gap_fwd;
  if (gap_fwd >= gap_bwd) {
    arc_dir_ = 1;
    arc_start_ = fwd;
    l1_ = gap_fwd;
    l2_ = gap_bwd;
  } else {
    arc_dir_ = -1;
    arc_start_ = (a_start_ - 1 + n_) % n_;
    l1_ = gap_bwd;
    l2_ = gap_fwd;
  }
  arc_len_ = l1_;
  ledger_.notes.push_back("arcs " + std::to_string(l1_) + "/" +
                          std::to_string(l2_));
  phase_ = 1;
  comps_.push_back({1 - t1_, 0});
  next_len_ = t1_ - 1;
  int s = second_series_offset(l1_, l2_);
  case2_open_ = l1_ % 2 == 0;
  ledger_.series.push_back(
      {2, 1, case2_open_ ? "c2-open" : "c1-open", s, s, 1, -1, -1, {}});
  comps_.push_back({s, s});
  queue_.push_back(s);
  awaiting_ = true;
}

void BreakerCycleStrategy::ascend(int s) {
  int len = next_len_;
  SeriesRecord& rec = ledger_.series.back();
  auto phi = [&](int x) { return x + (arc_len_ - x + 2) / 2; };
  int f;
  if (arc_len_ - (s - 1) <= len) {
    f = arc_len_;
    rec.label += "-rule1";
  } else if (arc_len_ - (phi(s + len - 1) - 1) >= std::max(1, len - 1)) {
    f = s + len - 1;
    rec.label += "-rule2";
  } else {
    f = s + 1;
    while (f < arc_len_ && !(arc_len_ - phi(f) < f - s)) ++f;
    rec.label += "-rule3";
  }
  for (int e = s + 1; e <= f; ++e) queue_.push_back(e);
}

void BreakerCycleStrategy::plan_phase1_tail(const SymState& state) {
  Comp cur = comps_.back();
  int s = cur.lo;
  int sp = ledger_.series.back().b_first;
  Comp prev = comps_[comps_.size() - 2];
  SeriesRecord& rec = ledger_.series.back();
  if (case2_open_) {
    case2_open_ = false;
    int mirror = l1_ - s + 1;
    if (sp == mirror) {
      // opponent mirrored the off-center edge: complete the component
      // toward the anchor, then restart in the shorter arc where the
      // mirroring reply is no longer available
      int f = std::max(2, s - next_len_ + 1);
      if (f == 3) f = 4;
      f = std::min(f, s);
      rec.label += "-swap";
      for (int e = s - 1; e >= f; --e) queue_.push_back(e);
      swap_on_finish_ = true;
      return;
    }
  }
  if (sp > s && sp <= arc_len_) {
    // opponent answered between the series start and its own twin:
    // descend toward the previous component and declare the pair
    int f = std::max(prev.hi + 2, s - next_len_ + 1);
    if (f == prev.hi + 3) f = prev.hi + 4;
    f = std::min(f, s);
    rec.label += "-descend";
    for (int e = s - 1; e >= f; --e) queue_.push_back(e);
  } else {
    ascend(s);
  }
}

void BreakerCycleStrategy::finish_phase1_series(const SymState& state) {
  Comp cur = comps_.back();
  Comp prev = comps_[comps_.size() - 2];
  SeriesRecord& rec = ledger_.series.back();
  rec.dist_prev = cur.lo - prev.hi - 1;
  check("lengths_decrease", cur.length() <= next_len_ || rec.label == "push");
  check("series_bound",
        static_cast<int>(ledger_.series.size()) <= 4 * ceil_log2(n_) + 8);
  next_len_ = std::max(1, cur.length() - 1);

  Comp pc, pd;
  if (scan_for_pair(state, &pc, &pd)) {
    enter_phase2(state, pc, pd);
    return;
  }
  if (swap_on_finish_) {
    swap_on_finish_ = false;
    swap_arcs(state);
    return;
  }
  if (cur.hi >= arc_len_) {
    // the working arc is exhausted; the opponent has been copying and is
    // now out of room
    expect_win_ = true;
    return;
  }
  int idx = static_cast<int>(ledger_.series.size()) + 1;
  int s = cur.hi + (arc_len_ - cur.hi + 2) / 2;
  if (s <= cur.hi + 1) {
    ledger_.series.push_back({idx, 1, "push", cur.hi + 1, cur.hi + 1,
                              1, -1, -1, {}});
    comps_.push_back({cur.hi + 1, cur.hi + 1});
    for (int e = cur.hi + 1; e <= arc_len_; ++e) queue_.push_back(e);
    expect_win_ = true;
    return;
  }
  ledger_.series.push_back({idx, 1, "", s, s, 1, -1, -1, {}});
  comps_.push_back({s, s});
  queue_.push_back(s);
  awaiting_ = true;
}

void BreakerCycleStrategy::swap_arcs(const SymState& state) {
  if (arc_dir_ == 1) {
    arc_dir_ = -1;
    arc_start_ = (a_start_ - 1 + n_) % n_;
  } else {
    arc_dir_ = 1;
    arc_start_ = (a_start_ + a_len_) % n_;
  }
  arc_len_ = l2_;
  std::swap(l1_, l2_);
  ledger_.notes.push_back("switched to the other arc");
  comps_.clear();
  comps_.push_back({1 - t1_, 0});
  int s = (arc_len_ + 1) / 2;
  int idx = static_cast<int>(ledger_.series.size()) + 1;
  ledger_.series.push_back({idx, 1, "c1-open", s, s, 1, -1, -1, {}});
  comps_.push_back({s, s});
  queue_.push_back(s);
  awaiting_ = true;
}

void BreakerCycleStrategy::enter_phase2(const SymState& state, Comp c, Comp d) {
  if (c.lo > d.lo) std::swap(c, d);
  check("pair_distinctive", pair_distinctive(state, c, d));
  phase_ = 2;
  c_ = c;
  d_ = d;
  j2_ = 0;
  start_phase2_series(state);
}

void BreakerCycleStrategy::start_phase2_series(const SymState&) {
  int a = c_.hi, b = d_.lo;
  int gap = b - a - 1;
  int idx = static_cast<int>(ledger_.series.size()) + 1;
  if (gap == 1) {
    ledger_.series.push_back({idx, 2, "last", a + 1, a + 1, 1, -1, gap, {}});
    comps_.push_back({a + 1, a + 1});
    queue_.push_back(a + 1);
    expect_win_ = true;
    return;
  }
  ++j2_;
  int s = (a + b) / 2;
  ledger_.series.push_back({idx, 2, "", s, s, 1, -1, -1, {}});
  check("pair_gap_not_two", gap != 2);
  comps_.push_back({s, s});
  queue_.push_back(s);
  awaiting_ = true;
}

void BreakerCycleStrategy::plan_phase2_tail(const SymState&) {
  int a = c_.hi, b = d_.lo;
  int s = comps_.back().lo;
  int sp = ledger_.series.back().b_first;
  int len = std::max(1, next_len_);
  SeriesRecord& rec = ledger_.series.back();
  case3_pending_ = false;
  if (sp > a && sp < s) {
    int f = std::min(b - 2, s + len - 1);
    if (s + len - 1 == b - 3) f = b - 4;
    rec.label = "p2c1";
    for (int e = s + 1; e <= f; ++e) queue_.push_back(e);
  } else if (sp > s && sp < b) {
    int f = std::max(a + 2, s - len + 1);
    if (s - len + 1 == a + 3) f = a + 4;
    rec.label = "p2c2";
    for (int e = s - 1; e >= f; --e) queue_.push_back(e);
  } else {
    rec.label = "p2c3";
    case3_pending_ = true;
    int lo = s, hi = s;
    bool up_next = true;
    auto stopped = [&] {
      int dl = lo - a - 1, dr = b - hi - 1;
      int size = hi - lo + 1;
      if (dl == 1 && dr == 1) return true;
      if (size == len && dl != 2 && dr != 2) return true;
      if (size >= len - 3 && size < len && dl == 3 && dr == 3) return true;
      return false;
    };
    while (!stopped()) {
      bool can_up = hi + 1 <= b - 2, can_down = lo - 1 >= a + 2;
      if (!can_up && !can_down) break;
      if ((up_next && can_up) || !can_down) {
        queue_.push_back(++hi);
      } else {
        queue_.push_back(--lo);
      }
      up_next = !up_next;
    }
  }
}

void BreakerCycleStrategy::finish_phase2_series(const SymState& state) {
  Comp cur = comps_.back();
  SeriesRecord& rec = ledger_.series.back();
  int old_gap = d_.lo - c_.hi - 1;
  next_len_ = std::max(1, cur.length() - 1);
  Comp nc, nd;
  bool chosen_ok = true;
  if (case3_pending_) {
    case3_pending_ = false;
    bool left_ok = pair_distinctive(state, c_, cur);
    bool right_ok = pair_distinctive(state, cur, d_);
    chosen_ok = left_ok || right_ok;
    if (left_ok) {
      nc = c_;
      nd = cur;
    } else {
      nc = cur;
      nd = d_;
    }
  } else if (rec.label == "p2c1") {
    nc = cur;
    nd = d_;
  } else {
    nc = c_;
    nd = cur;
  }
  if (nc.lo > nd.lo) std::swap(nc, nd);
  chosen_ok = chosen_ok && pair_distinctive(state, nc, nd);
  rec.checks["pair_distinctive"] = chosen_ok;
  if (!chosen_ok) {
    // the opponent maneuvered its counterparts into a copyable spacing;
    // take any pair that is still distinctive, else wait for the kill
    ledger_.notes.push_back("pair drifted, rescanning");
    if (!scan_for_pair(state, &nc, &nd)) {
      expect_win_ = true;
      return;
    }
  }
  int new_gap = nd.lo - nc.hi - 1;
  rec.dist_prev = new_gap;
  rec.checks["halving"] = 2 * new_gap <= old_gap;
  c_ = nc;
  d_ = nd;
  start_phase2_series(state);
}

int BreakerCycleStrategy::recover(const SymState& state) {
  ledger_.notes.push_back("recover at round " + std::to_string(state.round + 1));
  std::vector<int> free;
  for (int e = 0; e < n_; ++e)
    if (!state.colored(e)) free.push_back(e);
  if (free.size() >= 2 && free.size() <= 64) {
    for (int e : free) {
      std::vector<int> red = cyc_runs(state, state.red, e, n_);
      bool answered = false;
      for (int e2 : free) {
        if (e2 == e) continue;
        if (cyc_runs(state, state.blue, e2, n_) == red) {
          answered = true;
          break;
        }
      }
      if (!answered) {
        ledger_.notes.push_back("kill search move");
        return e;
      }
    }
  }
  Comp pc, pd;
  if (scan_for_pair(state, &pc, &pd)) {
    expect_win_ = false;
    phase_ = 2;
    c_ = pc;
    d_ = pd;
    j2_ = 0;
    start_phase2_series(state);
    if (!queue_.empty()) {
      int e = pop_move(state);
      if (e >= 0) return e;
    }
  }
  for (int e = 0; e < n_; ++e)
    if (!state.colored(e)) return e;
  return -1;
}

}  // namespace symgame
