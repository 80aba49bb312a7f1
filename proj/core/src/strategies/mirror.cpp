#include "symgame/strategies/mirror.hpp"

namespace symgame {

MirrorStrategy::MirrorStrategy(const Graph& g, VertexPermutation phi)
    : g_(g), phi_(std::move(phi)) {
  if (!phi_.is_automorphism(g))
    throw std::invalid_argument("mirror: not an automorphism");
  if (!phi_.is_involution())
    throw std::invalid_argument("mirror: not an involution");
  if (!phi_.is_fixed_edge_free(g))
    throw std::invalid_argument("mirror: edge map has a fixed edge");
  edge_map_.resize(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) edge_map_[e] = phi_.edge_image(g, e);
}

MirrorStrategy MirrorStrategy::for_graph(const Graph& g) {
  auto phi = find_involutory_fixed_edge_free_automorphism(g);
  if (!phi)
    throw std::invalid_argument(
        "mirror: graph has no involutory fixed-edge-free automorphism");
  return MirrorStrategy(g, *phi);
}

void MirrorStrategy::begin(const Graph& g, Player side, Variant, uint64_t) {
  if (g.edge_count() != g_.edge_count() || g.vertex_count() != g_.vertex_count())
    throw std::invalid_argument("mirror: bound to a different graph");
  if (side != Player::B)
    throw std::invalid_argument("mirror: second-player strategy only");
}

int MirrorStrategy::choose(const SymState& state) {
  return edge_map_[state.history.back()];
}

}  // namespace symgame
