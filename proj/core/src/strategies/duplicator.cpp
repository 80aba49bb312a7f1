#include "symgame/strategies/duplicator.hpp"

#include <algorithm>
#include <cmath>

namespace symgame {

namespace {

// walk the path/cycle to get vertex order; validates degree structure
std::vector<int> walk_order(const Graph& g, bool cycle) {
  int n = g.vertex_count();
  int start = 0;
  if (!cycle) {
    start = -1;
    for (int v = 0; v < n && start == -1; ++v)
      if (g.neighbors(v).size() == 1) start = v;
    if (start == -1) throw std::invalid_argument("duplicator: graph is not a path");
  }
  std::vector<int> order{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  int cur = start;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (!seen[w]) next = w;
    if (next == -1) throw std::invalid_argument("duplicator: unexpected shape");
    order.push_back(next);
    seen[next] = true;
    cur = next;
  }
  return order;
}

int clampi(int v, int lo, int hi) { return std::max(lo, std::min(hi, v)); }

}  // namespace

ThresholdDuplicator::ThresholdDuplicator(Shape shape, int budget)
    : shape_(shape), budget_param_(budget) {}

std::string ThresholdDuplicator::name() const {
  return shape_ == Shape::path ? "threshold-path" : "threshold-cycle";
}

void ThresholdDuplicator::begin(const Graph& g0, const Graph& g1, uint64_t) {
  const Graph* gs[2] = {&g0, &g1};
  for (int s = 0; s < 2; ++s) {
    vertex_at_[s] = walk_order(*gs[s], shape_ == Shape::cycle);
    len_[s] = gs[s]->vertex_count();
    pos_[s].assign(len_[s], -1);
    for (int i = 0; i < len_[s]; ++i) pos_[s][vertex_at_[s][i]] = i;
  }
  if (budget_param_ >= 0) {
    budget_ = budget_param_;
  } else {
    int n = std::min(g0.edge_count(), g1.edge_count());
    int logn = n >= 1 ? static_cast<int>(std::floor(std::log2(n))) : 0;
    budget_ = std::max(0, shape_ == Shape::path ? logn - 2 : logn - 1);
  }
}

int ThresholdDuplicator::choose(const EFState& state, EFMove m) {
  int s = m.side;
  int o = 1 - s;
  for (auto [u, v] : state.pairs) {
    int mine = s == 0 ? u : v;
    if (mine == m.vertex) return s == 0 ? v : u;
  }
  int r = state.round + 1;
  int t = r <= budget_ ? (1 << (budget_ - r)) : 1;
  int x = pos_[s][m.vertex];
  int y = shape_ == Shape::path ? reply_on_path(state, s, x, t)
                                : reply_on_cycle(state, s, x, t);

  // the slot should be free by order preservation; nudge defensively
  std::vector<bool> used(len_[o], false);
  for (auto [u, v] : state.pairs) used[pos_[o][o == 0 ? u : v]] = true;
  for (int d = 0; d < len_[o]; ++d) {
    for (int cand : {y + d, y - d}) {
      int w = shape_ == Shape::cycle
                  ? ((cand % len_[o]) + len_[o]) % len_[o]
                  : cand;
      if (w < 0 || w >= len_[o] || used[w]) continue;
      return vertex_at_[o][w];
    }
  }
  return vertex_at_[o][0];
}

int ThresholdDuplicator::reply_on_path(const EFState& state, int s, int x,
                                       int t) const {
  int o = 1 - s;
  std::vector<std::pair<int, int>> anchors;  // (pos in s, pos in o)
  anchors.emplace_back(0, 0);
  anchors.emplace_back(len_[s] - 1, len_[o] - 1);
  for (auto [u, v] : state.pairs) {
    int ps = pos_[s][s == 0 ? u : v];
    int po = pos_[o][s == 0 ? v : u];
    anchors.emplace_back(ps, po);
  }
  std::sort(anchors.begin(), anchors.end());
  auto below = std::pair{-1, -1};
  auto above = std::pair{len_[s], len_[o]};
  for (auto& a : anchors) {
    if (a.first == x) return a.second;  // endpoint anchor hit
    if (a.first < x) below = a;
    if (a.first > x && above.first == len_[s]) above = a;
  }
  int da = x - below.first;
  int db = above.first - x;
  int gap = above.second - below.second;
  if (gap <= 1) return clampi(below.second + da, 0, len_[o] - 1);  // no room left
  int off;
  if (da <= t && da < gap)
    off = da;
  else if (db <= t && gap - db > 0)
    off = gap - db;
  else if (gap >= 2 * t + 2)
    off = clampi(da, t + 1, gap - t - 1);
  else
    off = clampi(da, 1, gap - 1);
  return below.second + off;
}

int ThresholdDuplicator::reply_on_cycle(const EFState& state, int s, int x,
                                        int t) const {
  int o = 1 - s;
  if (state.pairs.empty()) return x % len_[o];
  std::vector<std::pair<int, int>> anchors;
  for (auto [u, v] : state.pairs) {
    int ps = pos_[s][s == 0 ? u : v];
    int po = pos_[o][s == 0 ? v : u];
    anchors.emplace_back(ps, po);
  }
  std::sort(anchors.begin(), anchors.end());
  // cyclic predecessor and successor of x
  auto pred = anchors.back();
  for (auto& a : anchors)
    if (a.first <= x) pred = a;
  auto succ = anchors.front();
  for (auto it = anchors.rbegin(); it != anchors.rend(); ++it)
    if (it->first > x) succ = *it;
  int n_s = len_[s];
  int n_o = len_[o];
  int da = ((x - pred.first) % n_s + n_s) % n_s;
  int db = ((succ.first - x) % n_s + n_s) % n_s;
  int gap = anchors.size() == 1 ? n_o
                                : ((succ.second - pred.second) % n_o + n_o) % n_o;
  if (gap == 0) gap = n_o;
  if (gap <= 1) return (pred.second + da) % n_o;
  int off;
  if (da <= t && da < gap)
    off = da;
  else if (db <= t && gap - db > 0)
    off = gap - db;
  else if (gap >= 2 * t + 2)
    off = clampi(da, t + 1, gap - t - 1);
  else
    off = clampi(da, 1, gap - 1);
  return (pred.second + off) % n_o;
}

ThresholdDuplicator duplicator_path_strategy(int n) {
  if (n < 2) throw std::invalid_argument("duplicator: need n >= 2 on paths");
  return ThresholdDuplicator(ThresholdDuplicator::Shape::path);
}

ThresholdDuplicator duplicator_cycle_strategy(int n) {
  if (n < 3) throw std::invalid_argument("duplicator: need n >= 3 on cycles");
  return ThresholdDuplicator(ThresholdDuplicator::Shape::cycle);
}

}  // namespace symgame
