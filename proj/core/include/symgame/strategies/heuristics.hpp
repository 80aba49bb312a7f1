#pragma once

#include <random>

#include "symgame/game.hpp"

namespace symgame {

/// Uniform random legal move, either side. Deterministic under seed.
class RandomStrategy : public Strategy {
 public:
  std::string name() const override { return "random"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

 private:
  std::mt19937_64 rng_;
};

/// Second-player baseline that replicates the structural change A's move
/// made to the red subgraph: a fresh component is answered with a fresh
/// component, a one-edge extension with an extension of a blue component
/// of the matching size, a merge with a bridge between matching blue
/// components. Candidates are verified against the isomorphism check on
/// path/cycle families and on small graphs; first passing candidate wins,
/// lowest free edge otherwise. Not optimal by design.
class GreedyCopyStrategy : public Strategy {
 public:
  std::string name() const override { return "greedy-copy"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;
};

/// First-player baseline: seeded random choice biased toward edges that
/// touch an existing red component (7 in 10 moves) so red tends to grow
/// irregular shapes.
class AdversarialRandomStrategy : public Strategy {
 public:
  std::string name() const override { return "adversarial-random"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

 private:
  std::mt19937_64 rng_;
};

}  // namespace symgame
