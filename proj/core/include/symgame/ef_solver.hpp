#pragma once

#include <unordered_map>

#include "symgame/ef_game.hpp"
#include "symgame/solver.hpp"

namespace symgame {

struct EFSolveReport {
  GameValue value;
  uint64_t states_expanded = 0;
  double elapsed_seconds = 0.0;
  bool isomorphic = false;  // duplicator never loses; value = round limit
  int round_limit = 0;
};

/// Exact duplicator-optimal round count for the EF game, by memoized
/// alternating search with iterative deepening on the round budget.
class EFSolver {
 public:
  EFSolver(const Graph& g0, const Graph& g1, int vertex_budget = 18);

  EFSolveReport solve(std::optional<int> round_limit = std::nullopt);

  /// Can the duplicator survive `budget` more rounds from this pairing?
  bool duplicator_survives(const std::vector<std::pair<int, int>>& pairs, int budget);

  /// Largest r <= cap the duplicator can still survive.
  int max_survivable(const std::vector<std::pair<int, int>>& pairs, int cap);

  const Graph& g0() const { return g0_; }
  const Graph& g1() const { return g1_; }

 private:
  bool extension_ok(const std::vector<std::pair<int, int>>& pairs, int x, int y) const;

  const Graph& g0_;
  const Graph& g1_;
  std::unordered_map<std::string, bool> memo_;
  uint64_t states_ = 0;
};

EFSolveReport solve_ef(const Graph& g0, const Graph& g1,
                       std::optional<int> round_limit = std::nullopt,
                       int vertex_budget = 18);

/// Exact-solver EF players, deterministic with lowest-index ties. Both
/// assume the default round limit |V(g0)|+|V(g1)| unless told otherwise.
class OptimalEFDuplicator : public EFDuplicator {
 public:
  explicit OptimalEFDuplicator(std::optional<int> round_limit = std::nullopt,
                               int vertex_budget = 18);
  std::string name() const override { return "optimal"; }
  void begin(const Graph& g0, const Graph& g1, uint64_t seed) override;
  int choose(const EFState& state, EFMove spoiler_move) override;

 private:
  std::optional<int> limit_opt_;
  int budget_;
  int limit_ = 0;
  std::unique_ptr<EFSolver> solver_;
};

class OptimalEFSpoiler : public EFSpoiler {
 public:
  explicit OptimalEFSpoiler(std::optional<int> round_limit = std::nullopt,
                            int vertex_budget = 18);
  std::string name() const override { return "optimal"; }
  void begin(const Graph& g0, const Graph& g1, uint64_t seed) override;
  EFMove choose(const EFState& state) override;

 private:
  std::optional<int> limit_opt_;
  int budget_;
  int limit_ = 0;
  std::unique_ptr<EFSolver> solver_;
};

}  // namespace symgame
