#include "doctest.h"

#include <cmath>

#include "symgame/ef_solver.hpp"

using namespace symgame;

TEST_CASE("one-edge path vs two-edge path") {
  // picking the two non-adjacent leaves of the longer path wins round 2:
  // the short path has no non-adjacent vertex pair to answer with
  auto rep = solve_ef(make_path(1), make_path(2));
  CHECK_FALSE(rep.isomorphic);
  CHECK(rep.value.rounds == 1);
}

TEST_CASE("isomorphic pair runs to the round limit") {
  auto rep = solve_ef(make_path(3), make_path(3));
  CHECK(rep.isomorphic);
  CHECK(rep.value.rounds == rep.round_limit);

  auto capped = solve_ef(make_cycle(4), make_complete_bipartite(2, 2), 5);
  CHECK(capped.isomorphic);
  CHECK(capped.value.rounds == 5);
}

TEST_CASE("single vertex difference in tiny graphs") {
  // empty-edge graphs of different order: adjacency never distinguishes,
  // only vertex exhaustion does
  Graph g1 = Graph::create(1, {});
  Graph g2 = Graph::create(2, {});
  auto rep = solve_ef(g1, g2);
  CHECK(rep.value.rounds == 1);
}

TEST_CASE("path length-distinguishing bounds") {
  for (int n : {2, 4}) {
    auto rep = solve_ef(make_path(n), make_path(n + 1));
    double lg = std::log2(n);
    CHECK(rep.value.rounds > lg - 2);
    CHECK(rep.value.rounds < lg + 2);
  }
}

TEST_CASE("cycle length-distinguishing bounds") {
  for (int n : {4, 6}) {
    auto rep = solve_ef(make_cycle(n), make_cycle(n + 1));
    double lg = std::log2(n);
    CHECK(rep.value.rounds > lg - 1);
    CHECK(rep.value.rounds < lg + 1);
  }
}

TEST_CASE("vertex budget is enforced and overridable") {
  CHECK_THROWS_AS(solve_ef(make_path(8), make_path(9)), CapabilityError);
  CHECK_NOTHROW(solve_ef(make_path(8), make_path(9), 4, 19));
}

TEST_CASE("optimal players realize the solved value") {
  Graph g0 = make_path(1);
  Graph g1 = make_path(2);
  OptimalEFSpoiler spoiler;
  OptimalEFDuplicator duplicator;
  Outcome out = play_ef(g0, g1, spoiler, duplicator);
  CHECK(out.survived_rounds == 1);
  CHECK(out.winner == Player::A);

  Graph p2 = make_path(2);
  Graph p3 = make_path(3);
  OptimalEFSpoiler s3;
  OptimalEFDuplicator d3;
  Outcome out2 = play_ef(p2, p3, s3, d3);
  CHECK(out2.survived_rounds == solve_ef(p2, p3).value.rounds);

  Graph c = make_cycle(5);
  OptimalEFSpoiler s2;
  OptimalEFDuplicator d2;
  Outcome iso_out = play_ef(c, make_cycle(5), s2, d2, 4);
  CHECK(iso_out.winner == Player::B);
  CHECK(iso_out.survived_rounds == 4);
}

TEST_CASE("duplicator answers a repeated pick consistently") {
  struct Repeater : EFSpoiler {
    std::string name() const override { return "repeater"; }
    void begin(const Graph&, const Graph&, uint64_t) override {}
    EFMove choose(const EFState& state) override {
      if (state.round == 0) return {1, 0};
      return {1, 0};  // same vertex again
    }
  };
  Graph g0 = make_path(2);
  Graph g1 = make_path(3);
  Repeater spoiler;
  OptimalEFDuplicator duplicator;
  Outcome out = play_ef(g0, g1, spoiler, duplicator, 2);
  // a repeat wastes the round; the duplicator cannot lose it
  CHECK(out.winner == Player::B);
}
