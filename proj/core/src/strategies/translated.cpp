#include "symgame/strategies/translated.hpp"

#include "symgame/isomorphism.hpp"
#include "symgame/solver.hpp"
#include "symgame/strategies/duplicator.hpp"
#include "symgame/strategies/mirror.hpp"

namespace symgame {

TranslatedStrategy::TranslatedStrategy(Graph g0,
                                       std::unique_ptr<EFDuplicator> duplicator,
                                       std::unique_ptr<Strategy> b0)
    : g0_(std::move(g0)),
      lg0_(line_graph(g0_)),
      duplicator_(std::move(duplicator)),
      b0_(std::move(b0)) {}

void TranslatedStrategy::begin(const Graph& g1, Player side, Variant variant,
                               uint64_t seed) {
  if (side != Player::B)
    throw std::invalid_argument("translated: second-player strategy only");
  if (contains_triangle(g1))
    throw std::invalid_argument(
        "translated: target graph contains a triangle; edge mapping does not "
        "lift to a vertex isomorphism");
  lg1_ = line_graph(g1);
  duplicator_->begin(lg0_, lg1_, seed);
  b0_->begin(g0_, Player::B, variant, seed);
  ef_state_ = EFState{};
  ef_state_.g0 = &lg0_;
  ef_state_.g1 = &lg1_;
  sim_state_ = SymState{};
  sim_state_.graph = &g0_;
  sim_state_.red = EdgeSet(g0_.edge_count());
  sim_state_.blue = EdgeSet(g0_.edge_count());
  oracles_intact_ = true;
}

int TranslatedStrategy::fallback(const SymState& state) const {
  for (int e = 0; e < state.graph->edge_count(); ++e)
    if (!state.colored(e)) return e;
  return -1;
}

int TranslatedStrategy::choose(const SymState& state) {
  if (!oracles_intact_) return fallback(state);
  int a = state.history.back();  // A's edge on g1 = spoiler vertex in L(g1)

  // step 1: spoiler plays a in L(g1), duplicator answers a' in L(g0)
  int a_prime = duplicator_->choose(ef_state_, EFMove{1, a});
  ef_state_.pairs.emplace_back(a_prime, a);
  ef_state_.round++;
  if (a_prime < 0 || a_prime >= lg0_.vertex_count() ||
      sim_state_.colored(a_prime) || !ef_state_.partial_isomorphism()) {
    oracles_intact_ = false;
    return fallback(state);
  }

  // step 2: one simulated round on g0: A plays a', b0 answers b'
  sim_state_.red.insert(a_prime);
  sim_state_.history.push_back(a_prime);
  sim_state_.to_move = Player::B;
  int b_prime = b0_->choose(sim_state_);
  if (b_prime < 0 || b_prime >= g0_.edge_count() || sim_state_.colored(b_prime)) {
    oracles_intact_ = false;
    return fallback(state);
  }
  sim_state_.blue.insert(b_prime);
  sim_state_.history.push_back(b_prime);
  sim_state_.to_move = Player::A;
  sim_state_.round++;
  if (!subgraphs_isomorphic(g0_, sim_state_.red, sim_state_.blue)) {
    oracles_intact_ = false;
    return fallback(state);
  }

  // step 3: spoiler plays b' in L(g0), duplicator answers b in L(g1)
  int b = duplicator_->choose(ef_state_, EFMove{0, b_prime});
  ef_state_.pairs.emplace_back(b_prime, b);
  ef_state_.round++;
  if (b < 0 || b >= lg1_.vertex_count() || state.colored(b) ||
      !ef_state_.partial_isomorphism()) {
    oracles_intact_ = false;
    return fallback(state);
  }
  return b;
}

TranslatedStrategy make_translated_for_path(int n) {
  if (n < 2 || n % 2 == 0)
    throw std::invalid_argument("translated path construction expects odd n >= 3");
  auto dup = std::make_unique<ThresholdDuplicator>(ThresholdDuplicator::Shape::path);
  Graph g0 = make_path(n + 1);
  // reflection of the even path: no fixed edge since n+1 is even
  std::vector<int> refl(n + 2);
  for (int v = 0; v <= n + 1; ++v) refl[v] = n + 1 - v;
  auto b0 = std::make_unique<MirrorStrategy>(g0, VertexPermutation(refl));
  return TranslatedStrategy(std::move(g0), std::move(dup), std::move(b0));
}

TranslatedStrategy make_translated_for_cycle(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("translated cycle construction expects odd n >= 3");
  auto dup = std::make_unique<ThresholdDuplicator>(ThresholdDuplicator::Shape::cycle);
  Graph g0 = make_cycle(n + 1);
  // antipodal rotation of the even cycle
  int half = (n + 1) / 2;
  std::vector<int> rot(n + 1);
  for (int v = 0; v <= n; ++v) rot[v] = (v + half) % (n + 1);
  auto b0 = std::make_unique<MirrorStrategy>(g0, VertexPermutation(rot));
  return TranslatedStrategy(std::move(g0), std::move(dup), std::move(b0));
}

}  // namespace symgame
