#include "symgame/ef_game.hpp"

#include <algorithm>

namespace symgame {

bool EFState::partial_isomorphism() const {
  for (size_t i = 0; i < pairs.size(); ++i) {
    for (size_t j = i + 1; j < pairs.size(); ++j) {
      auto [u0, u1] = pairs[i];
      auto [v0, v1] = pairs[j];
      if ((u0 == v0) != (u1 == v1)) return false;
      if (u0 == v0) continue;
      if (g0->adjacent(u0, v0) != g1->adjacent(u1, v1)) return false;
    }
  }
  return true;
}

Outcome play_ef(const Graph& g0, const Graph& g1, EFSpoiler& spoiler,
                EFDuplicator& duplicator, std::optional<int> round_limit,
                uint64_t seed) {
  int limit = round_limit.value_or(g0.vertex_count() + g1.vertex_count());
  EFState state;
  state.g0 = &g0;
  state.g1 = &g1;
  spoiler.begin(g0, g1, seed);
  duplicator.begin(g0, g1, seed);

  for (int r = 0; r < limit; ++r) {
    EFMove m = spoiler.choose(state);
    const Graph& picked = m.side == 0 ? g0 : g1;
    if (m.vertex < 0 || m.vertex >= picked.vertex_count())
      return {r, Player::B, OutcomeReason::illegal_move};
    int reply = duplicator.choose(state, m);
    const Graph& other = m.side == 0 ? g1 : g0;
    if (reply < 0 || reply >= other.vertex_count())
      return {r, Player::A, OutcomeReason::illegal_move};
    if (m.side == 0)
      state.pairs.emplace_back(m.vertex, reply);
    else
      state.pairs.emplace_back(reply, m.vertex);
    state.round = r + 1;
    if (!state.partial_isomorphism())
      return {r, Player::A, OutcomeReason::isomorphism_broken};
  }
  return {limit, Player::B, OutcomeReason::round_limit};
}

}  // namespace symgame
