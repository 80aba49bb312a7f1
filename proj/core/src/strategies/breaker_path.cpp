#include "symgame/strategies/breaker_path.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "json.hpp"

namespace symgame {

namespace {

int ceil_log2(int n) { return std::bit_width(static_cast<unsigned>(n - 1)); }

}  // namespace

int breaker_t(int n) { return 4 * ceil_log2(n) + 22; }

int breaker_phi(int n, int x) { return x + (n - x + 1) / 2; }

std::string SeriesLedger::to_json() const {
  nlohmann::json out;
  out["n"] = n;
  out["t"] = t;
  out["flipped"] = flipped;
  out["strict"] = strict;
  out["notes"] = notes;
  out["series"] = nlohmann::json::array();
  for (const SeriesRecord& r : series) {
    nlohmann::json s;
    s["index"] = r.index;
    s["phase"] = r.phase;
    s["label"] = r.label;
    s["s"] = r.s;
    s["f"] = r.f;
    s["length"] = r.length;
    s["b_first"] = r.b_first;
    s["dist_prev"] = r.dist_prev;
    s["checks"] = r.checks;
    out["series"].push_back(std::move(s));
  }
  return out.dump(2);
}

BreakerInvariantError::BreakerInvariantError(const std::string& what,
                                            std::string ledger_json)
    : std::runtime_error(what), ledger_json_(std::move(ledger_json)) {}

BreakerPathStrategy::BreakerPathStrategy(int n) : n_(n) {
  if (n < 2 || n % 2 == 0)
    throw std::invalid_argument("breaker-path: odd edge count required");
}

void BreakerPathStrategy::begin(const Graph& g, Player side, Variant variant,
                                uint64_t seed) {
  if (side != Player::A)
    throw std::invalid_argument("breaker-path: first-player strategy only");
  if (g.family() != Family::path || g.edge_count() != n_)
    throw std::invalid_argument("breaker-path: bound to the path with " +
                                std::to_string(n_) + " edges");
  ledger_ = SeriesLedger{};
  ledger_.n = n_;
  // cap the series length so a second component always fits: with the
  // uncapped value the first series can swallow the whole right half and
  // concede the last-move tempo on mid-size boards
  ledger_.t = std::min(breaker_t(n_), (n_ - 3) / 2);
  if (ledger_.t < breaker_t(n_))
    ledger_.notes.push_back("series length capped at (n-3)/2");
  ledger_.strict = n_ > 14 * breaker_t(n_);
  phase_ = 1;
  reds_.clear();
  b_first_.clear();
  queue_.clear();
  awaiting_case_ = false;
  flip_pending_ = false;
  expect_win_ = false;
  case3_pending_ = false;
  j2_ = 0;
  tprime_ = 0;
  fallback_.reset();
  if (n_ <= fallback_threshold) {
    fallback_ = std::make_unique<OptimalStrategy>(
        std::make_shared<SymSolver>(g, variant), Player::A);
    fallback_->begin(g, side, variant, seed);
  }
}

void BreakerPathStrategy::check(const std::string& name, bool ok) {
  ledger_.series.back().checks[name] = ok;
  if (!ok)
    throw BreakerInvariantError("breaker-path invariant failed: " + name,
                                ledger_.to_json());
}

int BreakerPathStrategy::pop_move(const SymState& state) {
  int pos = queue_.front();
  queue_.pop_front();
  int real = to_real(pos);
  if (state.colored(real))
    throw BreakerInvariantError(
        "breaker-path: planned edge already colored", ledger_.to_json());
  Comp& cur = reds_.back();
  cur.lo = std::min(cur.lo, pos);
  cur.hi = std::max(cur.hi, pos);
  SeriesRecord& rec = ledger_.series.back();
  rec.f = pos;
  rec.length = cur.length();
  return real;
}

int BreakerPathStrategy::choose(const SymState& state) {
  if (fallback_) return fallback_->choose(state);

  if (state.round == 0 && state.history.empty()) {
    int s1 = (n_ + 1) / 2;
    ledger_.series.push_back({1, 1, "first", s1, s1, 1, -1, -1, {}});
    reds_.push_back({s1, s1, 1});
    b_first_.push_back(-1);
    flip_pending_ = true;
    return to_real(s1);  // middle edge, orientation-independent
  }
  if (flip_pending_) {
    flip_pending_ = false;
    ledger_.flipped = state.history[1] + 1 > (n_ + 1) / 2;
    b_first_[0] = from_real(state.history[1]);
    ledger_.series[0].b_first = b_first_[0];
    int s1 = (n_ + 1) / 2;
    int f1 = std::min(s1 + ledger_.t - 2, n_);
    for (int e = s1 + 1; e <= f1; ++e) queue_.push_back(e);
    if (f1 == n_) ledger_.series[0].label = "first-truncated";
    return pop_move(state);
  }
  while (queue_.empty()) {
    if (awaiting_case_) {
      awaiting_case_ = false;
      b_first_.back() = from_real(state.history.back());
      ledger_.series.back().b_first = b_first_.back();
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
  return pop_move(state);
}

void BreakerPathStrategy::start_phase1_series(const SymState&) {
  int j = static_cast<int>(reds_.size()) + 1;
  int fprev = reds_.back().hi;
  int s = breaker_phi(n_, fprev);
  SeriesRecord rec{j, 1, "", s, s, 1, -1, -1, {}};
  if (s <= fprev + 1) {
    // no room for a new component: push to the right end, the opponent
    // runs out of space
    rec.label = "push";
    ledger_.series.push_back(rec);
    reds_.push_back({s, s, j});
    b_first_.push_back(-1);
    for (int e = s + 1; e <= n_; ++e) queue_.push_back(e);
    queue_.push_front(s);
    expect_win_ = true;
    return;
  }
  ledger_.series.push_back(rec);
  reds_.push_back({s, s, j});
  b_first_.push_back(-1);
  queue_.push_back(s);
  awaiting_case_ = true;
}

void BreakerPathStrategy::plan_phase1_tail(const SymState&) {
  int j = static_cast<int>(reds_.size());
  int s = reds_.back().lo;
  int sp = b_first_.back();
  int t = ledger_.t;
  SeriesRecord& rec = ledger_.series.back();
  if (sp < s) {
    int f;
    if (n_ - (s - 1) <= t - j) {
      f = n_;
      rec.label = "p1c1-rule1";
    } else if (n_ - (breaker_phi(n_, s + t - j - 1) - 1) >= t - (j + 1)) {
      f = s + t - j - 1;
      rec.label = "p1c1-rule2";
    } else {
      f = s + 1;
      while (f < n_ && !(n_ - breaker_phi(n_, f) < f - s)) ++f;
      rec.label = "p1c1-rule3";
    }
    for (int e = s + 1; e <= f; ++e) queue_.push_back(e);
  } else {
    int fprev = reds_[j - 2].hi;
    int f = std::max(fprev + 2, s - t + j + 1);
    if (f == fprev + 3) f = fprev + 4;
    rec.label = "p1c2";
    for (int e = s - 1; e >= f; --e) queue_.push_back(e);
  }
}

void BreakerPathStrategy::finish_phase1_series(const SymState& state) {
  int j = static_cast<int>(reds_.size());
  Comp cur = reds_.back();
  SeriesRecord& rec = ledger_.series.back();

  if (j == 1) {
    if (cur.hi < n_) {
      start_phase1_series(state);
    } else {
      // the first series already hit the right end; the opponent cannot
      // match its length on the other side
      expect_win_ = true;
    }
    return;
  }

  Comp prev = reds_[j - 2];
  int d = cur.lo - prev.hi - 1;
  rec.dist_prev = d;
  bool push = rec.label == "push";
  bool case2 = rec.label == "p1c2";

  // decide the continuation before recording finality-dependent checks
  enum class Next { cont, pair, win } next = Next::win;
  Comp pc, pd;
  if (push) {
    expect_win_ = true;
    next = Next::win;
  } else if (case2) {
    next = Next::pair;
    pc = prev;
    pd = cur;
  } else {
    int sp = b_first_.back();
    if (sp > prev.hi) {  // new blue component in the fresh gap
      next = cur.hi < n_ ? Next::cont : Next::win;
    } else {
      // blue component placed among the older ones
      int q = 0;
      condition4(state, j - 1, &q);
      Comp bj = blue_of(state, j);
      Comp bprev = blue_of(state, j - 1);
      int lo_bound = q >= 2 ? reds_[q - 2].hi : 0;
      int hi_bound = reds_[q - 1].lo;
      bool between = bj.lo > lo_bound && bj.hi < hi_bound;
      if (!between) {
        next = Next::pair;
        pc = prev;
        pd = cur;
      } else {
        int db = bj.lo > bprev.hi   ? bj.lo - bprev.hi - 1
                 : bprev.lo > bj.hi ? bprev.lo - bj.hi - 1
                                    : 0;
        if (db != d) {
          next = Next::pair;
          pc = prev;
          pd = cur;
        } else if (j >= 3 && !condition4(state, j, nullptr)) {
          next = Next::pair;
          pc = reds_[j - 3];
          pd = prev;
        } else {
          next = cur.hi < n_ ? Next::cont : Next::win;
          if (cur.hi == n_) {
            // the analysis promises a pair here; the board disagrees
            if (ledger_.strict) check("claim2_pair_exists", false);
            ledger_.notes.push_back("no distinctive pair at full board");
          }
        }
      }
    }
  }

  if (next == Next::pair && !ledger_.strict &&
      !pair_distinctive(state, pc, pd)) {
    // out of the analyzed regime the designated pair can sit at distance
    // two; take any other distinctive pair, else keep building
    bool found = false;
    for (int i = 1; i <= j && !found; ++i)
      for (int k = i + 1; k <= j && !found; ++k) {
        Comp a = reds_[i - 1], b = reds_[k - 1];
        if (a.lo > b.lo) std::swap(a, b);
        if (b.lo - a.hi - 1 < 1) continue;
        if (!pair_distinctive(state, a, b)) continue;
        pc = a;
        pd = b;
        found = true;
      }
    if (!found) {
      ledger_.notes.push_back("designated pair not distinctive, continuing");
      next = cur.hi < n_ ? Next::cont : Next::win;
    } else {
      ledger_.notes.push_back("designated pair replaced");
    }
  }

  if (!push) {
    if (j >= 2) check("alpha_decrease", cur.length() < prev.length());
    if (j >= 2)
      check("claim1_geometric",
            d >= 0 && d < std::ldexp(static_cast<double>(n_), -(j - 1)));
    if (j >= 3 && ledger_.series[j - 2].dist_prev >= 1)
      check("claim1_halving", 2 * d < ledger_.series[j - 2].dist_prev);
    check("claim1_series_bound", j <= ceil_log2(n_));
    if (next == Next::cont || ledger_.strict)
      check("claim1_length_floor", cur.length() > std::log2(n_) + 4);
  }
  if (next == Next::cont) record_conditions(state, j);

  switch (next) {
    case Next::cont:
      start_phase1_series(state);
      break;
    case Next::pair:
      enter_phase2(state, pc, pd);
      break;
    case Next::win:
      expect_win_ = true;
      break;
  }
}

void BreakerPathStrategy::enter_phase2(const SymState& state, Comp c, Comp d) {
  if (c.lo > d.lo) std::swap(c, d);
  check("claim2_distinctive", pair_distinctive(state, c, d));
  phase_ = 2;
  c_ = c;
  d_ = d;
  tprime_ = reds_.back().length();
  j2_ = 0;
  start_phase2_series(state);
}

void BreakerPathStrategy::start_phase2_series(const SymState&) {
  int a = c_.hi, b = d_.lo;
  int gap = b - a - 1;
  int idx = static_cast<int>(reds_.size()) + 1;
  if (gap == 1) {
    ledger_.series.push_back({idx, 2, "last", a + 1, a + 1, 1, -1, gap, {}});
    reds_.push_back({a + 1, a + 1, idx});
    b_first_.push_back(-1);
    queue_.push_back(a + 1);
    expect_win_ = true;
    return;
  }
  ++j2_;
  int s = (a + b) / 2;  // middle edge of the gap
  ledger_.series.push_back({idx, 2, "", s, s, 1, -1, -1, {}});
  check("pair_gap_not_two", gap != 2);
  reds_.push_back({s, s, idx});
  b_first_.push_back(-1);
  queue_.push_back(s);
  awaiting_case_ = true;
}

void BreakerPathStrategy::plan_phase2_tail(const SymState&) {
  int a = c_.hi, b = d_.lo;
  int s = reds_.back().lo;
  int sp = b_first_.back();
  int len = tprime_ - j2_;  // assigned series length
  SeriesRecord& rec = ledger_.series.back();
  case3_pending_ = false;
  if (a < sp && sp < s) {
    int f = std::min(b - 2, s + len - 1);
    if (s + len - 1 == b - 3) f = b - 4;
    rec.label = "p2c1";
    for (int e = s + 1; e <= f; ++e) queue_.push_back(e);
  } else if (s < sp && sp < b) {
    int f = std::max(a + 2, s - len + 1);
    if (s - len + 1 == a + 3) f = a + 4;
    rec.label = "p2c2";
    for (int e = s - 1; e >= f; --e) queue_.push_back(e);
  } else {
    rec.label = "p2c3";
    case3_pending_ = true;
    // grow alternately toward both components until a stopping shape
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

void BreakerPathStrategy::finish_phase2_series(const SymState& state) {
  Comp cur = reds_.back();
  SeriesRecord& rec = ledger_.series.back();
  int old_gap = d_.lo - c_.hi - 1;
  Comp nc, nd;
  if (case3_pending_) {
    case3_pending_ = false;
    bool left_ok = pair_distinctive(state, c_, cur);
    bool right_ok = pair_distinctive(state, cur, d_);
    check("claim5_pair_exists", left_ok || right_ok);
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
  int new_gap = nd.lo - nc.hi - 1;
  rec.dist_prev = new_gap;
  check("claim4_halving", 2 * new_gap <= old_gap);
  check("claim4_series_bound", j2_ < std::log2(n_) - 1);
  check("claim4_alpha",
        cur.length() < reds_[reds_.size() - 2].length());
  check("claim5_distinctive", pair_distinctive(state, nc, nd));
  c_ = nc;
  d_ = nd;
  start_phase2_series(state);
}

std::vector<BreakerPathStrategy::Comp> BreakerPathStrategy::blue_comps(
    const SymState& state) const {
  std::vector<Comp> out;
  for (const Component& c :
       ComponentView::of(*state.graph, state.blue).components) {
    int lo = n_ + 1, hi = 0;
    for (int e : c.edges) {
      int pos = from_real(e);
      lo = std::min(lo, pos);
      hi = std::max(hi, pos);
    }
    out.push_back({lo, hi, 0});
  }
  return out;
}

BreakerPathStrategy::Comp BreakerPathStrategy::blue_of(const SymState& state,
                                                       int series_index) const {
  int first = b_first_[series_index - 1];
  if (first < 0) return {0, 0, series_index};
  for (const Comp& c : blue_comps(state))
    if (c.lo <= first && first <= c.hi) return {c.lo, c.hi, series_index};
  return {0, 0, series_index};
}

bool BreakerPathStrategy::pair_distinctive(const SymState& state, const Comp& p,
                                           const Comp& q) const {
  Comp a = p, b = q;
  if (a.lo > b.lo) std::swap(a, b);
  int d = b.lo - a.hi - 1;
  if (d == 2) return false;
  for (int e = a.hi + 1; e < b.lo; ++e)
    if (state.colored(to_real(e))) return false;
  Comp bp = blue_of(state, p.series), bq = blue_of(state, q.series);
  if (bp.hi == 0 || bq.hi == 0) return true;  // no blue counterpart at all
  if (bp.lo > bq.lo) std::swap(bp, bq);
  int db = bq.lo > bp.hi ? bq.lo - bp.hi - 1 : 0;
  if (db != d) return true;
  for (int e = bp.hi + 1; e < bq.lo; ++e)
    if (state.colored(to_real(e))) return true;
  return false;
}

bool BreakerPathStrategy::condition4(const SymState& state, int m,
                                     int* q_out) const {
  Comp bm = blue_of(state, m);
  if (bm.hi == 0) return false;
  int q = m + 1;
  for (int i = 1; i <= m; ++i)
    if (reds_[i - 1].lo > bm.hi) {
      q = i;
      break;
    }
  if (q_out) *q_out = q;
  if (q > m) return false;
  int lo_bound = q >= 2 ? reds_[q - 2].hi : 0;
  if (bm.lo <= lo_bound) return false;
  int hi_bound = reds_[q - 1].lo;
  std::vector<Comp> bs;
  for (int p = q; p <= m; ++p) {
    Comp bp = blue_of(state, p);
    if (bp.hi == 0 || bp.lo <= lo_bound || bp.hi >= hi_bound) return false;
    bs.push_back(bp);
  }
  if (bs.size() >= 2) {
    bool inc = bs[1].lo > bs[0].lo;
    for (size_t i = 1; i < bs.size(); ++i) {
      if (inc != (bs[i].lo > bs[i - 1].lo)) return false;
      const Comp& x = bs[i - 1];
      const Comp& y = bs[i];
      int db = y.lo > x.hi ? y.lo - x.hi - 1 : x.lo > y.hi ? x.lo - y.hi - 1 : 0;
      int p = q + static_cast<int>(i);
      int dr = reds_[p - 1].lo - reds_[p - 2].hi - 1;
      if (db != dr) return false;
    }
  }
  return true;
}

void BreakerPathStrategy::record_conditions(const SymState& state, int m) {
  bool cond0 = true;
  for (int p = 2; p <= m; ++p)
    cond0 = cond0 && reds_[p - 1].length() < reds_[p - 2].length();
  check("cond0", cond0);
  int fm = reds_[m - 1].hi;
  check("cond1", n_ - fm > 2);
  bool cond2 = true;
  for (int e = fm + 1; e <= n_; ++e)
    if (state.colored(to_real(e))) cond2 = false;
  check("cond2", cond2);
  bool cond3 = true;
  for (int p = 2; p <= m; ++p)
    cond3 = cond3 && reds_[p - 1].lo > reds_[p - 2].hi;
  check("cond3", cond3);
  check("cond4", condition4(state, m, nullptr));
  bool cond5 = true;
  for (int p = 2; p <= m; ++p) {
    int d = reds_[p - 1].lo - reds_[p - 2].hi - 1;
    if (!(n_ - (ledger_.series[p - 1].s - 1) > d)) cond5 = false;
  }
  check("cond5", cond5);
}

int BreakerPathStrategy::recover(const SymState& state) {
  ledger_.notes.push_back("recover at round " + std::to_string(state.round + 1));
  // on a path two edge sets are isomorphic iff their run-length multisets
  // agree, so a one-ply kill search is cheap: find a move the opponent
  // cannot answer
  std::vector<int> free;
  for (int e = 0; e < n_; ++e)
    if (!state.colored(e)) free.push_back(e);
  if (free.size() >= 2 && free.size() <= 64) {
    auto runs = [&](const EdgeSet& set, int extra) {
      std::vector<int> out;
      int run = 0;
      for (int e = 0; e < n_; ++e) {
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
    };
    for (int e : free) {
      auto red = runs(state.red, e);
      bool answered = false;
      for (int e2 : free) {
        if (e2 == e) continue;
        if (runs(state.blue, e2) == red) {
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
  // otherwise fall back to any distinctive pair
  int m = static_cast<int>(reds_.size());
  int best = -1, best_gap = n_ + 1;
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k) {
      Comp a = reds_[i - 1], b = reds_[k - 1];
      if (a.lo > b.lo) std::swap(a, b);
      int gap = b.lo - a.hi - 1;
      if (gap < 1 || gap == 2 || gap >= best_gap) continue;
      if (!pair_distinctive(state, a, b)) continue;
      bool free_gap = true;
      for (int e = a.hi + 1; e < b.lo; ++e)
        if (state.colored(to_real(e))) free_gap = false;
      if (!free_gap) continue;
      best = i * 1000 + k;
      best_gap = gap;
    }
  if (best >= 0) {
    Comp a = reds_[best / 1000 - 1], b = reds_[best % 1000 - 1];
    if (a.lo > b.lo) std::swap(a, b);
    if (best_gap == 1) return to_real(a.hi + 1);
    expect_win_ = false;
    phase_ = 2;
    c_ = a;
    d_ = b;
    tprime_ = std::max(4, std::min(tprime_ == 0 ? best_gap : tprime_, best_gap));
    j2_ = 0;
    start_phase2_series(state);
    if (!queue_.empty()) return pop_move(state);
  }
  for (int e = 0; e < state.graph->edge_count(); ++e)
    if (!state.colored(e)) return e;
  return -1;
}

}  // namespace symgame
