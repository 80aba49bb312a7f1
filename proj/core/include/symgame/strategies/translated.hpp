#pragma once

#include <memory>

#include "symgame/ef_game.hpp"
#include "symgame/game.hpp"

namespace symgame {

/// Second-player strategy on g1 built from two oracles: a duplicator for
/// the EF game on (L(g0), L(g1)) and a second-player strategy for g0.
/// Each round simulates: A's edge a, read as a vertex of L(g1), is
/// played by the spoiler; the duplicator answers a' in L(g0); a' is
/// played as A's move in the simulated game on g0 and b0 answers b';
/// the spoiler then plays b' and the duplicator's answer b is B's move
/// on g1. Valid while g1 is triangle-free (edge-isomorphisms of such
/// graphs come from isomorphisms).
class TranslatedStrategy : public Strategy {
 public:
  TranslatedStrategy(Graph g0, std::unique_ptr<EFDuplicator> duplicator,
                     std::unique_ptr<Strategy> b0);

  std::string name() const override { return "translated"; }
  void begin(const Graph& g1, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  /// True while both oracles have held up (partial isomorphism intact in
  /// the EF simulation, b0's position isomorphic in the g0 simulation).
  bool oracles_intact() const { return oracles_intact_; }
  int simulated_rounds() const { return sim_state_.round; }

 private:
  int fallback(const SymState& state) const;

  Graph g0_;
  Graph lg0_;
  Graph lg1_;
  std::unique_ptr<EFDuplicator> duplicator_;
  std::unique_ptr<Strategy> b0_;
  EFState ef_state_;
  SymState sim_state_;  // simulated game on g0
  bool oracles_intact_ = true;
};

/// Canonical construction for odd paths and cycles: g0 is the even
/// companion (one edge longer), b0 is the mirror, the duplicator is the
/// threshold strategy on the line graphs.
TranslatedStrategy make_translated_for_path(int n);
TranslatedStrategy make_translated_for_cycle(int n);

}  // namespace symgame
