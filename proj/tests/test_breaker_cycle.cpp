#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "symgame/solver.hpp"
#include "symgame/strategies/breaker_cycle.hpp"
#include "symgame/strategies/heuristics.hpp"
#include "symgame/strategies/translated.hpp"

using namespace symgame;

namespace {

// run-length multiset of one color around the cycle; two edge-induced
// subgraphs of the same cycle are isomorphic iff these agree
std::vector<int> runs(const std::vector<char>& col, char c) {
  int n = static_cast<int>(col.size());
  int anchor = -1;
  for (int e = 0; e < n; ++e)
    if (col[e] != c) {
      anchor = e;
      break;
    }
  std::vector<int> out;
  int run = 0;
  for (int i = 1; i <= n; ++i) {
    int e = (anchor + i) % n;
    if (col[e] == c) {
      ++run;
    } else if (run) {
      out.push_back(run);
      run = 0;
    }
  }
  if (run) out.push_back(run);
  std::sort(out.begin(), out.end());
  return out;
}

struct Exhaust {
  int n = 0;
  long long leaves = 0;
  bool a_always_wins = true;

  void explore(std::vector<int>& bm) {
    Graph g = make_cycle(n);
    BreakerCycleStrategy a(n);
    a.begin(g, Player::A, Variant::sym, 0);
    SymState st;
    st.graph = &g;
    st.red = EdgeSet(n);
    st.blue = EdgeSet(n);
    std::vector<char> col(n, 0);
    for (int b : bm) {
      int am = a.choose(st);
      st.red.insert(am);
      st.history.push_back(am);
      col[am] = 'r';
      st.blue.insert(b);
      st.history.push_back(b);
      col[b] = 'b';
      st.round++;
    }
    int am = a.choose(st);
    if (am < 0 || am >= n || col[am]) {
      a_always_wins = false;
      return;
    }
    st.red.insert(am);
    st.history.push_back(am);
    col[am] = 'r';
    std::vector<int> red = runs(col, 'r');
    std::vector<int> replies;
    for (int e = 0; e < n; ++e) {
      if (col[e]) continue;
      col[e] = 'b';
      if (runs(col, 'b') == red) replies.push_back(e);
      col[e] = 0;
    }
    if (replies.empty()) {
      if (std::count(col.begin(), col.end(), 0) == 0) a_always_wins = false;
      leaves++;
      return;
    }
    for (int b : replies) {
      bm.push_back(b);
      explore(bm);
      bm.pop_back();
    }
  }
};

}  // namespace

TEST_CASE("second series opening follows the arc parities") {
  // odd longer arc: its middle edge
  CHECK(BreakerCycleStrategy::second_series_offset(3, 0) == 2);
  CHECK(BreakerCycleStrategy::second_series_offset(7, 2) == 4);
  CHECK(BreakerCycleStrategy::second_series_offset(11, 4) == 6);
  // even longer arc: distance (l2-1)/2 from the red component
  CHECK(BreakerCycleStrategy::second_series_offset(8, 5) == 3);
  CHECK(BreakerCycleStrategy::second_series_offset(10, 7) == 4);
}

TEST_CASE("cycle breaker defeats every reply sequence on small odd boards") {
  for (int n : {15, 17, 19, 21}) {
    CAPTURE(n);
    Exhaust ex;
    ex.n = n;
    std::vector<int> bm;
    ex.explore(bm);
    CHECK(ex.a_always_wins);
    CHECK(ex.leaves > 0);
  }
}

TEST_CASE("cycle breaker beats the heuristic opponents across odd sizes") {
  for (int n = 15; n <= 201; n += 2) {
    Graph g = make_cycle(n);
    double cap = 3.5 * std::log2(n) * std::log2(n) + 40 * std::log2(n);
    CAPTURE(n);
    {
      BreakerCycleStrategy a(n);
      GreedyCopyStrategy b;
      Outcome out = play_sym(g, a, b);
      CHECK(out.winner == Player::A);
      CHECK(out.survived_rounds < cap);
    }
    {
      BreakerCycleStrategy a(n);
      TranslatedStrategy b = make_translated_for_cycle(n);
      Outcome out = play_sym(g, a, b);
      CHECK(out.winner == Player::A);
      CHECK(out.survived_rounds < cap);
    }
    {
      BreakerCycleStrategy a(n);
      RandomStrategy b;
      Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, 11);
      CHECK(out.winner == Player::A);
    }
  }
}

TEST_CASE("cycle breaker round count is polylogarithmic on large boards") {
  for (int n : {1001, 2001}) {
    Graph g = make_cycle(n);
    double cap = 3.5 * std::log2(n) * std::log2(n) + 40 * std::log2(n);
    CAPTURE(n);
    BreakerCycleStrategy a(n);
    GreedyCopyStrategy b;
    Outcome out = play_sym(g, a, b);
    CHECK(out.winner == Player::A);
    CHECK(out.survived_rounds < cap);
    CHECK(a.ledger().series.size() >= 2);
  }
}

TEST_CASE("small odd cycles match the exact solver through the fallback") {
  for (int n : {5, 7, 9, 11, 13}) {
    Graph g = make_cycle(n);
    CAPTURE(n);
    BreakerCycleStrategy a(n);
    auto solver = std::make_shared<SymSolver>(g, Variant::sym);
    int value = solver->solve().value.rounds;
    OptimalStrategy b(solver, Player::B);
    Outcome out = play_sym(g, a, b);
    CHECK(a.used_fallback());
    CHECK(out.survived_rounds == value);
  }
}

TEST_CASE("cycle breaker validates its input") {
  CHECK_THROWS_AS(BreakerCycleStrategy(16), std::invalid_argument);
  BreakerCycleStrategy a(15);
  CHECK_THROWS_AS(a.begin(make_cycle(17), Player::A, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.begin(make_cycle(15), Player::B, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.begin(make_path(15), Player::A, Variant::sym, 0),
                  std::invalid_argument);
}
