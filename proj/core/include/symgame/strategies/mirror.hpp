#pragma once

#include "symgame/automorphism.hpp"
#include "symgame/game.hpp"

namespace symgame {

/// Second-player echo strategy: given an involutory automorphism whose
/// edge map has no fixed edge, answer every move e with its image. The
/// image edge is always free, so this survives the full floor(|E|/2)
/// rounds.
class MirrorStrategy : public Strategy {
 public:
  MirrorStrategy(const Graph& g, VertexPermutation phi);

  /// Searches for a qualifying automorphism; throws std::invalid_argument
  /// when the graph has none.
  static MirrorStrategy for_graph(const Graph& g);

  std::string name() const override { return "mirror"; }
  void begin(const Graph& g, Player side, Variant variant, uint64_t seed) override;
  int choose(const SymState& state) override;

  const VertexPermutation& involution() const { return phi_; }

 private:
  Graph g_;
  VertexPermutation phi_;
  std::vector<int> edge_map_;
};

}  // namespace symgame
