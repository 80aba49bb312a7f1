#include "symgame/ef_solver.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "symgame/isomorphism.hpp"

namespace symgame {

namespace {

std::string pairs_key(const std::vector<std::pair<int, int>>& pairs, int budget) {
  auto sorted = pairs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::ostringstream ss;
  ss << budget << '|';
  for (auto [a, b] : sorted) ss << a << ',' << b << ';';
  return ss.str();
}

}  // namespace

EFSolver::EFSolver(const Graph& g0, const Graph& g1, int vertex_budget)
    : g0_(g0), g1_(g1) {
  if (g0.vertex_count() + g1.vertex_count() > vertex_budget)
    throw CapabilityError("EF solver budget exceeded: " +
                          std::to_string(g0.vertex_count() + g1.vertex_count()) +
                          " vertices, budget " + std::to_string(vertex_budget));
}

bool EFSolver::extension_ok(const std::vector<std::pair<int, int>>& pairs, int x,
                            int y) const {
  for (auto [u, v] : pairs) {
    if (u == x || v == y) return u == x && v == y;
    if (g0_.adjacent(x, u) != g1_.adjacent(y, v)) return false;
  }
  return true;
}

bool EFSolver::duplicator_survives(const std::vector<std::pair<int, int>>& pairs,
                                   int budget) {
  if (budget <= 0) return true;
  std::string key = pairs_key(pairs, budget);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  ++states_;

  std::vector<bool> used0(g0_.vertex_count(), false), used1(g1_.vertex_count(), false);
  for (auto [u, v] : pairs) {
    used0[u] = true;
    used1[v] = true;
  }

  bool survives = true;
  // Spoiler repeats are dominated (a consistent answer costs him a
  // round), so fresh picks suffice for the exact value.
  for (int side = 0; side < 2 && survives; ++side) {
    const Graph& picked = side == 0 ? g0_ : g1_;
    const Graph& other = side == 0 ? g1_ : g0_;
    const auto& used_picked = side == 0 ? used0 : used1;
    const auto& used_other = side == 0 ? used1 : used0;
    for (int u = 0; u < picked.vertex_count() && survives; ++u) {
      if (used_picked[u]) continue;
      bool answered = false;
      for (int v = 0; v < other.vertex_count() && !answered; ++v) {
        if (used_other[v]) continue;
        int x = side == 0 ? u : v;
        int y = side == 0 ? v : u;
        if (!extension_ok(pairs, x, y)) continue;
        auto next = pairs;
        next.emplace_back(x, y);
        if (duplicator_survives(next, budget - 1)) answered = true;
      }
      if (!answered) survives = false;
    }
  }
  memo_.emplace(std::move(key), survives);
  return survives;
}

int EFSolver::max_survivable(const std::vector<std::pair<int, int>>& pairs, int cap) {
  int r = 0;
  while (r < cap && duplicator_survives(pairs, r + 1)) ++r;
  return r;
}

EFSolveReport EFSolver::solve(std::optional<int> round_limit) {
  auto t0 = std::chrono::steady_clock::now();
  EFSolveReport rep;
  rep.round_limit = round_limit.value_or(g0_.vertex_count() + g1_.vertex_count());
  if (graphs_isomorphic(g0_, g1_)) {
    rep.isomorphic = true;
    rep.value.rounds = rep.round_limit;
  } else {
    rep.value.rounds = max_survivable({}, rep.round_limit);
  }
  rep.states_expanded = states_;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

EFSolveReport solve_ef(const Graph& g0, const Graph& g1,
                       std::optional<int> round_limit, int vertex_budget) {
  EFSolver solver(g0, g1, vertex_budget);
  return solver.solve(round_limit);
}

OptimalEFDuplicator::OptimalEFDuplicator(std::optional<int> round_limit,
                                         int vertex_budget)
    : limit_opt_(round_limit), budget_(vertex_budget) {}

void OptimalEFDuplicator::begin(const Graph& g0, const Graph& g1, uint64_t) {
  solver_ = std::make_unique<EFSolver>(g0, g1, budget_);
  limit_ = limit_opt_.value_or(g0.vertex_count() + g1.vertex_count());
}

int OptimalEFDuplicator::choose(const EFState& state, EFMove m) {
  const Graph& other = m.side == 0 ? *state.g1 : *state.g0;
  // Consistency on repeats.
  for (auto [u, v] : state.pairs) {
    int mine = m.side == 0 ? u : v;
    if (mine == m.vertex) return m.side == 0 ? v : u;
  }
  std::vector<bool> used(other.vertex_count(), false);
  for (auto [u, v] : state.pairs) used[m.side == 0 ? v : u] = true;

  int remaining = std::max(0, limit_ - state.round - 1);
  int best_v = -1, best_r = -1;
  for (int v = 0; v < other.vertex_count(); ++v) {
    if (used[v]) continue;
    int x = m.side == 0 ? m.vertex : v;
    int y = m.side == 0 ? v : m.vertex;
    auto next = state.pairs;
    next.emplace_back(x, y);
    EFState probe = state;
    probe.pairs = next;
    if (!probe.partial_isomorphism()) continue;
    int r = solver_->max_survivable(next, remaining);
    if (r > best_r) {
      best_r = r;
      best_v = v;
    }
  }
  if (best_v >= 0) return best_v;
  // Every answer loses; pick the lowest unused vertex.
  for (int v = 0; v < other.vertex_count(); ++v)
    if (!used[v]) return v;
  return 0;
}

OptimalEFSpoiler::OptimalEFSpoiler(std::optional<int> round_limit, int vertex_budget)
    : limit_opt_(round_limit), budget_(vertex_budget) {}

void OptimalEFSpoiler::begin(const Graph& g0, const Graph& g1, uint64_t) {
  solver_ = std::make_unique<EFSolver>(g0, g1, budget_);
  limit_ = limit_opt_.value_or(g0.vertex_count() + g1.vertex_count());
}

EFMove OptimalEFSpoiler::choose(const EFState& state) {
  std::vector<bool> used0(state.g0->vertex_count(), false),
      used1(state.g1->vertex_count(), false);
  for (auto [u, v] : state.pairs) {
    used0[u] = true;
    used1[v] = true;
  }
  int remaining = std::max(0, limit_ - state.round - 1);
  EFMove best{0, 0};
  int best_val = INT32_MAX;
  for (int side = 0; side < 2; ++side) {
    const Graph& picked = side == 0 ? *state.g0 : *state.g1;
    const Graph& other = side == 0 ? *state.g1 : *state.g0;
    const auto& used_picked = side == 0 ? used0 : used1;
    const auto& used_other = side == 0 ? used1 : used0;
    for (int u = 0; u < picked.vertex_count(); ++u) {
      if (used_picked[u]) continue;
      int reply_best = -1;  // -1: duplicator has no surviving answer
      for (int v = 0; v < other.vertex_count(); ++v) {
        if (used_other[v]) continue;
        int x = side == 0 ? u : v;
        int y = side == 0 ? v : u;
        auto next = state.pairs;
        next.emplace_back(x, y);
        EFState probe = state;
        probe.pairs = next;
        if (!probe.partial_isomorphism()) continue;
        reply_best = std::max(reply_best, 1 + solver_->max_survivable(next, remaining));
      }
      int val = reply_best < 0 ? 0 : reply_best;
      if (val < best_val) {
        best_val = val;
        best = {side, u};
      }
    }
  }
  return best;
}

}  // namespace symgame
