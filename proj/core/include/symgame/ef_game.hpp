#pragma once

#include <cstdint>

#include "symgame/game.hpp"
#include "symgame/graph.hpp"

namespace symgame {

/// A spoiler pick: a vertex of graph 0 or graph 1.
struct EFMove {
  int side = 0;  // 0 or 1
  int vertex = 0;
};

/// Position of an Ehrenfeucht-Fraisse game on two graphs. pairs holds
/// the accumulated correspondence as (vertex of g0, vertex of g1),
/// regardless of which side the spoiler picked on.
struct EFState {
  const Graph* g0 = nullptr;
  const Graph* g1 = nullptr;
  std::vector<std::pair<int, int>> pairs;
  int round = 0;

  /// Is the correspondence a partial isomorphism (injective both ways,
  /// adjacency preserved and reflected)?
  bool partial_isomorphism() const;
};

class EFSpoiler {
 public:
  virtual ~EFSpoiler() = default;
  virtual std::string name() const = 0;
  virtual void begin(const Graph& g0, const Graph& g1, uint64_t seed) = 0;
  virtual EFMove choose(const EFState& state) = 0;
};

class EFDuplicator {
 public:
  virtual ~EFDuplicator() = default;
  virtual std::string name() const = 0;
  virtual void begin(const Graph& g0, const Graph& g1, uint64_t seed) = 0;
  /// Answer on the opposite side of spoiler_move.
  virtual int choose(const EFState& state, EFMove spoiler_move) = 0;
};

/// Rounds survive while the correspondence stays a partial isomorphism.
/// Re-picking a chosen vertex is legal; the duplicator must then answer
/// consistently with the existing pairing. Default round limit is
/// |V(g0)|+|V(g1)|. Winner A = spoiler, B = duplicator.
Outcome play_ef(const Graph& g0, const Graph& g1, EFSpoiler& spoiler,
                EFDuplicator& duplicator,
                std::optional<int> round_limit = std::nullopt, uint64_t seed = 0);

}  // namespace symgame
