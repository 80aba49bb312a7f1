#include "doctest.h"

#include "symgame/ef_solver.hpp"
#include "symgame/isomorphism.hpp"
#include "symgame/solver.hpp"
#include "symgame/strategies/bipartite.hpp"
#include "symgame/strategies/duplicator.hpp"
#include "symgame/strategies/heuristics.hpp"
#include "symgame/strategies/mirror.hpp"
#include "symgame/strategies/translated.hpp"

using namespace symgame;

namespace {

// every A move sequence vs the given B; returns the minimum rounds B survives
int exhaustive_a_min_rounds(const Graph& g, Strategy& b, SymState& state) {
  int total = g.edge_count() / 2;
  if (state.round == total) return state.round;
  int worst = total;
  for (int a = 0; a < g.edge_count(); ++a) {
    if (state.colored(a)) continue;
    SymState next = state;
    next.red.insert(a);
    next.history.push_back(a);
    int reply = b.choose(next);
    if (reply < 0 || next.colored(reply)) return state.round;
    next.blue.insert(reply);
    next.history.push_back(reply);
    if (!subgraphs_isomorphic(g, next.red, next.blue)) return state.round;
    next.round++;
    worst = std::min(worst, exhaustive_a_min_rounds(g, b, next));
    if (worst == state.round) break;
  }
  return worst;
}

int exhaustive_a_min_rounds(const Graph& g, Strategy& b) {
  b.begin(g, Player::B, Variant::sym, 0);
  SymState state;
  state.graph = &g;
  state.red = EdgeSet(g.edge_count());
  state.blue = EdgeSet(g.edge_count());
  return exhaustive_a_min_rounds(g, b, state);
}

}  // namespace

TEST_CASE("mirror survives every A line on small even paths and cycles") {
  for (const Graph& g : {make_path(4), make_path(6), make_cycle(4), make_cycle(6),
                         make_complete_bipartite(2, 3)}) {
    MirrorStrategy b = MirrorStrategy::for_graph(g);
    CHECK(exhaustive_a_min_rounds(g, b) == g.edge_count() / 2);
  }
}

TEST_CASE("mirror reflects the reflection on a path") {
  Graph p = make_path(4);
  MirrorStrategy b = MirrorStrategy::for_graph(p);
  b.begin(p, Player::B, Variant::sym, 0);
  SymState state;
  state.graph = &p;
  state.red = EdgeSet(4, {0});
  state.blue = EdgeSet(4);
  state.history = {0};
  CHECK(b.choose(state) == 3);  // reflection maps edge 1 to edge 4, 1-based
}

TEST_CASE("mirror vs solver-optimal A on C_6") {
  Graph c = make_cycle(6);
  auto solver = std::make_shared<SymSolver>(c);
  OptimalStrategy a(solver, Player::A);
  MirrorStrategy b = MirrorStrategy::for_graph(c);
  Outcome out = play_sym(c, a, b);
  CHECK(out.survived_rounds == 3);
  CHECK(out.winner == Player::B);
}

TEST_CASE("mirror rejects unsuitable input") {
  CHECK_THROWS_AS(MirrorStrategy::for_graph(make_path(5)), std::invalid_argument);
  Graph p = make_path(4);
  std::vector<int> identity{0, 1, 2, 3, 4};
  CHECK_THROWS_AS(MirrorStrategy(p, VertexPermutation(identity)),
                  std::invalid_argument);
}

TEST_CASE("bipartite pairing on K_3,3 vs solver-optimal A") {
  Graph g = make_complete_bipartite(3, 3);
  auto solver = std::make_shared<SymSolver>(g);
  OptimalStrategy a(solver, Player::A);
  BipartiteBStrategy b;
  Outcome out = play_sym(g, a, b);
  CHECK(out.survived_rounds >= 1);
}

TEST_CASE("bipartite pairing on K_3,5 and K_5,5 vs heuristic opponents") {
  for (auto [m, l] : {std::pair{3, 5}, std::pair{5, 5}}) {
    Graph g = make_complete_bipartite(m, l);
    int guarantee = (std::max(m, l) - 1) / 2;
    for (uint64_t seed = 0; seed < 6; ++seed) {
      RandomStrategy a;
      BipartiteBStrategy b;
      Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, seed);
      CHECK(out.survived_rounds >= guarantee);
      AdversarialRandomStrategy a2;
      BipartiteBStrategy b2;
      Outcome out2 = play_sym(g, a2, b2, Variant::sym, std::nullopt, seed);
      CHECK(out2.survived_rounds >= guarantee);
    }
  }
}

TEST_CASE("bipartite strategy validates its graph") {
  BipartiteBStrategy b;
  CHECK_THROWS_AS(b.begin(make_complete_bipartite(2, 3), Player::B, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(b.begin(make_path(4), Player::B, Variant::sym, 0),
                  std::invalid_argument);
}

TEST_CASE("threshold duplicator survives one round vs exact spoiler") {
  {
    Graph g0 = make_path(8), g1 = make_path(9);
    OptimalEFSpoiler spoiler(std::nullopt, 19);
    ThresholdDuplicator dup = duplicator_path_strategy(8);
    Outcome out = play_ef(g0, g1, spoiler, dup);
    CHECK(out.survived_rounds >= 1);
  }
  {
    Graph g0 = make_cycle(4), g1 = make_cycle(5);
    OptimalEFSpoiler spoiler;
    ThresholdDuplicator dup = duplicator_cycle_strategy(4);
    Outcome out = play_ef(g0, g1, spoiler, dup);
    CHECK(out.survived_rounds >= 1);
  }
}

TEST_CASE("threshold duplicator answers repeats with the paired vertex") {
  struct Repeater : EFSpoiler {
    std::string name() const override { return "repeater"; }
    void begin(const Graph&, const Graph&, uint64_t) override {}
    EFMove choose(const EFState&) override { return {0, 3}; }
  };
  Graph g0 = make_path(8), g1 = make_path(9);
  ThresholdDuplicator dup = duplicator_path_strategy(8);
  Repeater spoiler;
  Outcome out = play_ef(g0, g1, spoiler, dup, 3);
  CHECK(out.winner == Player::B);  // repeats cannot beat a consistent answer
}

TEST_CASE("random strategy is reproducible under seed") {
  Graph g = make_path(9);
  for (uint64_t seed : {0ull, 7ull}) {
    RandomStrategy a1, b1, a2, b2;
    Transcript t1, t2;
    play_sym(g, a1, b1, Variant::sym, std::nullopt, seed, &t1);
    play_sym(g, a2, b2, Variant::sym, std::nullopt, seed, &t2);
    REQUIRE(t1.rounds.size() == t2.rounds.size());
    for (size_t i = 0; i < t1.rounds.size(); ++i) {
      CHECK(t1.rounds[i].a_edge == t2.rounds[i].a_edge);
      CHECK(t1.rounds[i].b_edge == t2.rounds[i].b_edge);
    }
  }
}

TEST_CASE("greedy-copy mirrors structure on an even path") {
  Graph g = make_path(8);
  RandomStrategy a;
  GreedyCopyStrategy b;
  Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, 0);
  CHECK(out.survived_rounds == 4);
}

TEST_CASE("random vs random yields a well-formed outcome") {
  Graph g = make_complete(4);
  RandomStrategy a, b;
  Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, 5);
  CHECK(out.survived_rounds >= 0);
  CHECK(out.survived_rounds <= 3);
}

TEST_CASE("translated strategy on odd paths vs random A") {
  for (int n : {9, 15, 33}) {
    Graph g1 = make_path(n);
    TranslatedStrategy b = make_translated_for_path(n);
    RandomStrategy a;
    Outcome out = play_sym(g1, a, b, Variant::sym, std::nullopt, 1);
    double bound = 0.5 * std::log2(n - 1) - 1.0;
    CHECK(out.survived_rounds > bound);
  }
}

TEST_CASE("translated strategy on odd cycles vs random A") {
  for (int n : {9, 15, 33}) {
    Graph g1 = make_cycle(n);
    TranslatedStrategy b = make_translated_for_cycle(n);
    RandomStrategy a;
    Outcome out = play_sym(g1, a, b, Variant::sym, std::nullopt, 1);
    double bound = 0.5 * std::log2(n) - 0.5;
    CHECK(out.survived_rounds > bound);
  }
}

TEST_CASE("translated strategy refuses graphs with triangles") {
  TranslatedStrategy b = make_translated_for_path(9);
  CHECK_THROWS_AS(b.begin(make_complete(4), Player::B, Variant::sym, 0),
                  std::invalid_argument);
}

TEST_CASE("translating a perfect pair of oracles never loses") {
  // g0 isomorphic to g1: optimal duplicator plus mirror on g0
  int n = 6;
  Graph g0 = make_path(n);
  auto dup = std::make_unique<OptimalEFDuplicator>();
  auto b0 = std::make_unique<MirrorStrategy>(MirrorStrategy::for_graph(g0));
  TranslatedStrategy b(g0, std::move(dup), std::move(b0));
  Graph g1 = make_path(n);
  RandomStrategy a;
  Outcome out = play_sym(g1, a, b, Variant::sym, std::nullopt, 3);
  CHECK(out.survived_rounds == n / 2);
  CHECK(b.oracles_intact());
}
