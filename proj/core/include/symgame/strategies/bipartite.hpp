#pragma once

#include "symgame/game.hpp"

namespace symgame {

/// Second-player strategy on complete bipartite graphs with two odd
/// classes. Keeps the smaller class pointwise fixed and grows a partial
/// involution on the larger class, pairing each newly touched vertex
/// with a still-untouched one; B's reply is the image of A's edge. The
/// pairing pool lasts at least (max(m,l)-1)/2 rounds.
class BipartiteBStrategy : public Strategy {
 public:
  BipartiteBStrategy() = default;

  std::string name() const override { return "bipartite-b"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  /// Rounds the pairing pool is guaranteed to cover.
  int guaranteed_rounds() const { return guaranteed_; }

 private:
  const Graph* g_ = nullptr;
  std::vector<int> cls_;      // 0/1 bipartition class per vertex
  int paired_class_ = 0;      // class carrying the involution
  std::vector<int> partner_;  // involution on paired_class_, -1 if unset
  int guaranteed_ = 0;
};

}  // namespace symgame
