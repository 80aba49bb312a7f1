#pragma once

#include <memory>
#include <unordered_map>

#include "symgame/automorphism.hpp"
#include "symgame/game.hpp"
#include "symgame/graph.hpp"

namespace symgame {

/// Exact number of rounds the maximizing player survives under optimal play.
struct GameValue {
  int rounds = 0;
};

enum class SolveOrder { maxmin, minmax };
enum class Reduction { none, automorphism };

struct SolveReport {
  GameValue value;
  uint64_t states_expanded = 0;
  uint64_t memo_hits = 0;
  double elapsed_seconds = 0.0;
  Reduction reduction = Reduction::none;
};

/// Memoized exact search over a Sym(G) / Sym+(G) game tree. The maxmin
/// order computes L(Sym(G)) by backward induction on survivable rounds;
/// the minmax order computes L'(Sym(G)) independently, as the least l
/// such that A has a winning strategy in the l+1-round game. The two
/// must agree.
class SymSolver {
 public:
  SymSolver(const Graph& g, Variant variant = Variant::sym,
            Reduction reduction = Reduction::automorphism, int edge_budget = 16);

  const Graph& graph() const { return g_; }
  Variant variant() const { return variant_; }

  SolveReport solve(SolveOrder order = SolveOrder::maxmin);

  /// Extra rounds B survives from an A-to-move position (variant sym).
  int position_value(uint32_t red, uint32_t blue);

  /// Optimal moves with lowest-edge-index tie-breaking. For sym_plus the
  /// witness frontier of the position must be supplied.
  int best_a_move(const SymState& state);
  int best_b_move(const SymState& state, int pending_a);

 private:
  int value_a(uint32_t red, uint32_t blue);
  int value_b(uint32_t red, uint32_t blue, int pending, int beta);
  int value_a_plus(uint32_t red, uint32_t blue, const std::set<IsoWitness>& frontier);
  int value_b_plus(uint32_t red, uint32_t blue, const std::set<IsoWitness>& frontier,
                   int pending, int beta);
  bool a_wins_within(uint32_t red, uint32_t blue, int budget);
  bool iso_masks(uint32_t red, uint32_t blue);
  EdgeSet mask_to_set(uint32_t mask) const;

  const Graph& g_;
  Variant variant_;
  Reduction reduction_;
  int total_rounds_;
  PositionCanonicalizer canon_;
  std::unordered_map<uint64_t, int> memo_a_;
  std::unordered_map<uint64_t, bool> iso_cache_;
  std::unordered_map<uint64_t, int> win_memo_;  // key ^ budget for the minmax route
  std::unordered_map<std::string, int> memo_plus_;
  uint64_t states_ = 0;
  uint64_t hits_ = 0;
};

SolveReport solve_sym(const Graph& g, Variant variant = Variant::sym,
                      SolveOrder order = SolveOrder::maxmin,
                      Reduction reduction = Reduction::automorphism,
                      int edge_budget = 16);

/// Strategy achieving the exact game value against any opponent
/// (deterministic, lowest-edge-index ties). Holds a shared solver.
class OptimalStrategy : public Strategy {
 public:
  OptimalStrategy(std::shared_ptr<SymSolver> solver, Player side);
  static OptimalStrategy make(const Graph& g, Player side,
                              Variant variant = Variant::sym);

  std::string name() const override { return "optimal"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

 private:
  std::shared_ptr<SymSolver> solver_;
  Player side_;
};

struct InequalityReport {
  int lsym_g0 = 0;
  int lsym_g1 = 0;
  int lef = 0;                  // L(Ef(G0,G1)), capped at the round limit
  double logical_rhs = 0.0;     // min{lef/4, lsym_g0}
  bool logical_holds = false;
  bool combinatorial_applicable = false;  // g1 triangle-free
  int lef_line = 0;             // L(Ef(L(G0),L(G1)))
  double combinatorial_rhs = 0.0;
  bool combinatorial_holds = false;
};

/// Evaluates L(Sym(G1)) >= min{L(Ef(G0,G1))/4, L(Sym(G0))} and, when G1
/// is triangle-free, the line-graph variant with factor 1/2.
InequalityReport check_sym_ef_inequality(const Graph& g0, const Graph& g1);

bool contains_triangle(const Graph& g);

}  // namespace symgame
