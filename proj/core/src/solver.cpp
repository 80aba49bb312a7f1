#include "symgame/solver.hpp"

#include <bit>
#include <chrono>
#include <sstream>

#include "symgame/ef_solver.hpp"
#include "symgame/isomorphism.hpp"

namespace symgame {

namespace {

std::string plus_key(uint32_t red, uint32_t blue, const std::set<IsoWitness>& frontier,
                     int pending, int budget) {
  std::ostringstream ss;
  ss << red << ':' << blue << ':' << pending << ':' << budget << '|';
  for (const auto& w : frontier) {
    for (auto [a, b] : w) ss << a << ',' << b << ';';
    ss << '/';
  }
  return ss.str();
}

}  // namespace

SymSolver::SymSolver(const Graph& g, Variant variant, Reduction reduction,
                     int edge_budget)
    : g_(g),
      variant_(variant),
      reduction_(reduction),
      total_rounds_(g.edge_count() / 2),
      canon_(g, reduction == Reduction::automorphism) {
  if (g.edge_count() > edge_budget || g.edge_count() > 16) {
    std::ostringstream ss;
    ss << "solver budget exceeded: " << g.edge_count() << " edges, budget "
       << edge_budget << " (state estimate ~3^" << g.edge_count() << ")";
    throw CapabilityError(ss.str());
  }
}

EdgeSet SymSolver::mask_to_set(uint32_t mask) const {
  EdgeSet s(g_.edge_count());
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    s.insert(e);
  }
  return s;
}

bool SymSolver::iso_masks(uint32_t red, uint32_t blue) {
  uint64_t key = canon_.key(red, blue);
  auto it = iso_cache_.find(key);
  if (it != iso_cache_.end()) return it->second;
  bool ok = subgraphs_isomorphic(g_, mask_to_set(red), mask_to_set(blue));
  iso_cache_.emplace(key, ok);
  return ok;
}

int SymSolver::value_a(uint32_t red, uint32_t blue) {
  int i = std::popcount(red);
  if (i == total_rounds_) return 0;
  uint64_t key = canon_.key(red, blue);
  if (auto it = memo_a_.find(key); it != memo_a_.end()) {
    ++hits_;
    return it->second;
  }
  ++states_;
  uint32_t colored = red | blue;
  int best = total_rounds_ - i;  // upper bound for B
  for (int a = 0; a < g_.edge_count(); ++a) {
    if ((colored >> a) & 1) continue;
    int v = value_b(red, blue, a, best);
    if (v < best) best = v;
    if (best == 0) break;
  }
  memo_a_.emplace(key, best);
  return best;
}

int SymSolver::value_b(uint32_t red, uint32_t blue, int pending, int beta) {
  uint32_t nred = red | (1u << pending);
  uint32_t colored = nred | blue;
  int best = 0;
  for (int b = 0; b < g_.edge_count(); ++b) {
    if ((colored >> b) & 1) continue;
    if (!iso_masks(nred, blue | (1u << b))) continue;
    int v = 1 + value_a(nred, blue | (1u << b));
    if (v > best) best = v;
    if (best >= beta) return best;  // A already has a better option
  }
  return best;
}

bool SymSolver::a_wins_within(uint32_t red, uint32_t blue, int budget) {
  int i = std::popcount(red);
  budget = std::min(budget, total_rounds_ - i);
  if (budget <= 0) return false;
  uint64_t key = canon_.key(red, blue) | (static_cast<uint64_t>(budget) << 48);
  if (auto it = win_memo_.find(key); it != win_memo_.end()) {
    ++hits_;
    return it->second;
  }
  ++states_;
  uint32_t colored = red | blue;
  bool wins = false;
  for (int a = 0; a < g_.edge_count() && !wins; ++a) {
    if ((colored >> a) & 1) continue;
    uint32_t nred = red | (1u << a);
    bool all_replies_lose = true;
    for (int b = 0; b < g_.edge_count() && all_replies_lose; ++b) {
      if (((nred | blue) >> b) & 1) continue;
      uint32_t nblue = blue | (1u << b);
      if (iso_masks(nred, nblue) && !a_wins_within(nred, nblue, budget - 1))
        all_replies_lose = false;
    }
    wins = all_replies_lose;
  }
  win_memo_.emplace(key, wins);
  return wins;
}

int SymSolver::value_a_plus(uint32_t red, uint32_t blue,
                            const std::set<IsoWitness>& frontier) {
  int i = std::popcount(red);
  if (i == total_rounds_) return 0;
  std::string key = plus_key(red, blue, frontier, -1, -1);
  if (auto it = memo_plus_.find(key); it != memo_plus_.end()) {
    ++hits_;
    return it->second;
  }
  ++states_;
  uint32_t colored = red | blue;
  int best = total_rounds_ - i;
  for (int a = 0; a < g_.edge_count(); ++a) {
    if ((colored >> a) & 1) continue;
    int v = value_b_plus(red, blue, frontier, a, best);
    if (v < best) best = v;
    if (best == 0) break;
  }
  memo_plus_.emplace(std::move(key), best);
  return best;
}

int SymSolver::value_b_plus(uint32_t red, uint32_t blue,
                            const std::set<IsoWitness>& frontier, int pending,
                            int beta) {
  uint32_t nred = red | (1u << pending);
  uint32_t colored = nred | blue;
  int best = 0;
  for (int b = 0; b < g_.edge_count(); ++b) {
    if ((colored >> b) & 1) continue;
    uint32_t nblue = blue | (1u << b);
    auto next = extend_witnesses(g_, mask_to_set(nred), mask_to_set(nblue), frontier,
                                 pending, b);
    if (next.empty()) continue;
    int v = 1 + value_a_plus(nred, nblue, next);
    if (v > best) best = v;
    if (best >= beta) return best;
  }
  return best;
}

int SymSolver::position_value(uint32_t red, uint32_t blue) {
  if (variant_ != Variant::sym)
    throw std::invalid_argument("position_value is for variant sym");
  return value_a(red, blue);
}

SolveReport SymSolver::solve(SolveOrder order) {
  auto t0 = std::chrono::steady_clock::now();
  SolveReport report;
  report.reduction = canon_.exact() ? Reduction::automorphism : Reduction::none;
  int value = 0;
  if (order == SolveOrder::maxmin) {
    value = variant_ == Variant::sym ? value_a(0, 0) : value_a_plus(0, 0, {});
  } else {
    if (variant_ != Variant::sym)
      throw CapabilityError("minmax order implemented for variant sym only");
    value = total_rounds_;
    for (int l = 0; l < total_rounds_; ++l) {
      if (a_wins_within(0, 0, l + 1)) {
        value = l;
        break;
      }
    }
  }
  report.value.rounds = value;
  report.states_expanded = states_;
  report.memo_hits = hits_;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

int SymSolver::best_a_move(const SymState& state) {
  uint32_t red = static_cast<uint32_t>(state.red.low_bits());
  uint32_t blue = static_cast<uint32_t>(state.blue.low_bits());
  uint32_t colored = red | blue;
  int best_edge = -1;
  int best_val = g_.edge_count();
  for (int a = 0; a < g_.edge_count(); ++a) {
    if ((colored >> a) & 1) continue;
    int v = variant_ == Variant::sym
                ? value_b(red, blue, a, g_.edge_count())
                : value_b_plus(red, blue, state.iso_witnesses, a, g_.edge_count());
    if (v < best_val) {
      best_val = v;
      best_edge = a;
    }
  }
  return best_edge;
}

int SymSolver::best_b_move(const SymState& state, int pending_a) {
  uint32_t red = static_cast<uint32_t>(state.red.low_bits());
  uint32_t blue = static_cast<uint32_t>(state.blue.low_bits());
  // state already includes A's pending edge as red; normalize.
  if ((red >> pending_a) & 1) red &= ~(1u << pending_a);
  uint32_t nred = red | (1u << pending_a);
  uint32_t colored = nred | blue;
  int best_edge = -1;
  int best_val = -1;
  for (int b = 0; b < g_.edge_count(); ++b) {
    if ((colored >> b) & 1) continue;
    uint32_t nblue = blue | (1u << b);
    int v = 0;
    if (variant_ == Variant::sym) {
      if (iso_masks(nred, nblue)) v = 1 + value_a(nred, nblue);
    } else {
      auto next = extend_witnesses(g_, mask_to_set(nred), mask_to_set(nblue),
                                   state.iso_witnesses, pending_a, b);
      if (!next.empty()) v = 1 + value_a_plus(nred, nblue, next);
    }
    if (v > best_val) {
      best_val = v;
      best_edge = b;
    }
  }
  return best_edge;
}

SolveReport solve_sym(const Graph& g, Variant variant, SolveOrder order,
                      Reduction reduction, int edge_budget) {
  SymSolver solver(g, variant, reduction, edge_budget);
  return solver.solve(order);
}

OptimalStrategy::OptimalStrategy(std::shared_ptr<SymSolver> solver, Player side)
    : solver_(std::move(solver)), side_(side) {}

OptimalStrategy OptimalStrategy::make(const Graph& g, Player side, Variant variant) {
  return OptimalStrategy(std::make_shared<SymSolver>(g, variant), side);
}

void OptimalStrategy::begin(const Graph& g, Player side, Variant, uint64_t) {
  if (g.edge_count() != solver_->graph().edge_count())
    throw std::invalid_argument("optimal strategy bound to a different graph");
  side_ = side;
}

int OptimalStrategy::choose(const SymState& state) {
  if (side_ == Player::A) return solver_->best_a_move(state);
  return solver_->best_b_move(state, state.history.back());
}

bool contains_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.adjacent(v, w)) return true;
  return false;
}

InequalityReport check_sym_ef_inequality(const Graph& g0, const Graph& g1) {
  InequalityReport rep;
  rep.lsym_g0 = solve_sym(g0).value.rounds;
  rep.lsym_g1 = solve_sym(g1).value.rounds;
  rep.lef = solve_ef(g0, g1).value.rounds;
  rep.logical_rhs = std::min(rep.lef / 4.0, static_cast<double>(rep.lsym_g0));
  rep.logical_holds = rep.lsym_g1 >= rep.logical_rhs;
  rep.combinatorial_applicable = !contains_triangle(g1);
  if (rep.combinatorial_applicable) {
    rep.lef_line = solve_ef(line_graph(g0), line_graph(g1)).value.rounds;
    rep.combinatorial_rhs =
        std::min(rep.lef_line / 2.0, static_cast<double>(rep.lsym_g0));
    rep.combinatorial_holds = rep.lsym_g1 >= rep.combinatorial_rhs;
  }
  return rep;
}

}  // namespace symgame
