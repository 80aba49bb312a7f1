#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "symgame/solver.hpp"
#include "symgame/strategies/breaker_path.hpp"
#include "symgame/strategies/heuristics.hpp"
#include "symgame/strategies/translated.hpp"

using namespace symgame;

namespace {

// run-length multiset of one color; on a path this determines the
// isomorphism type of the colored subgraph
std::vector<int> runs(const std::vector<char>& col, int n, char c) {
  std::vector<int> out;
  int run = 0;
  for (int e = 0; e < n; ++e) {
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
  int max_rounds = 0;
  bool a_always_wins = true;

  void explore(std::vector<int>& bm) {
    Graph g = make_path(n);
    BreakerPathStrategy a(n);
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
    std::vector<int> red = runs(col, n, 'r');
    std::vector<int> replies;
    for (int e = 0; e < n; ++e) {
      if (col[e]) continue;
      col[e] = 'b';
      if (runs(col, n, 'b') == red) replies.push_back(e);
      col[e] = 0;
    }
    if (replies.empty()) {
      // opponent is dead only if it was obliged to answer
      if (std::count(col.begin(), col.end(), 0) == 0) a_always_wins = false;
      max_rounds = std::max(max_rounds, static_cast<int>(bm.size()) + 1);
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

void check_ledger(const BreakerPathStrategy& a) {
  for (const SeriesRecord& s : a.ledger().series)
    for (const auto& [name, ok] : s.checks) {
      CAPTURE(name);
      CHECK(ok);
    }
}

}  // namespace

TEST_CASE("series parameter and step function match their formulas") {
  CHECK(breaker_t(101) == 4 * 7 + 22);
  CHECK(breaker_t(1024) == 4 * 10 + 22);
  CHECK(breaker_t(1025) == 4 * 11 + 22);
  CHECK(breaker_phi(101, 99) == 100);
  CHECK(breaker_phi(101, 51) == 76);
  CHECK(breaker_phi(15, 8) == 12);
}

TEST_CASE("path breaker defeats every reply sequence on small odd boards") {
  for (int n : {15, 17, 19, 21, 23}) {
    CAPTURE(n);
    Exhaust ex;
    ex.n = n;
    std::vector<int> bm;
    ex.explore(bm);
    CHECK(ex.a_always_wins);
    CHECK(ex.leaves > 0);
    CHECK(ex.max_rounds <= n / 2);
  }
}

TEST_CASE("path breaker beats the heuristic opponents across odd sizes") {
  for (int n = 15; n <= 201; n += 2) {
    Graph g = make_path(n);
    double cap = 3.5 * std::log2(n) * std::log2(n) + 40 * std::log2(n);
    CAPTURE(n);
    {
      BreakerPathStrategy a(n);
      GreedyCopyStrategy b;
      Outcome out = play_sym(g, a, b);
      CHECK(out.winner == Player::A);
      CHECK(out.survived_rounds < cap);
      check_ledger(a);
    }
    {
      BreakerPathStrategy a(n);
      TranslatedStrategy b = make_translated_for_path(n);
      Outcome out = play_sym(g, a, b);
      CHECK(out.winner == Player::A);
      CHECK(out.survived_rounds < cap);
      check_ledger(a);
    }
    {
      BreakerPathStrategy a(n);
      RandomStrategy b;
      Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, 7);
      CHECK(out.winner == Player::A);
      check_ledger(a);
    }
  }
}

TEST_CASE("path breaker round count is polylogarithmic on large boards") {
  for (int n : {1001, 2001}) {
    Graph g = make_path(n);
    double cap = 3.5 * std::log2(n) * std::log2(n) + 40 * std::log2(n);
    CAPTURE(n);
    BreakerPathStrategy a(n);
    GreedyCopyStrategy b;
    Outcome out = play_sym(g, a, b);
    CHECK(out.winner == Player::A);
    CHECK(out.survived_rounds < cap);
    CHECK(a.ledger().series.size() >= 2);
    check_ledger(a);
  }
}

TEST_CASE("translated opponent extracts the additive lower bound") {
  // the second player guarantees floor(log n) - 2 rounds, so the breaker
  // cannot finish faster than that
  for (int n : {101, 501, 1001}) {
    Graph g = make_path(n);
    BreakerPathStrategy a(n);
    TranslatedStrategy b = make_translated_for_path(n);
    Outcome out = play_sym(g, a, b);
    CAPTURE(n);
    CHECK(out.winner == Player::A);
    CHECK(out.survived_rounds >=
          static_cast<int>(std::floor(std::log2(n))) - 2);
  }
}

TEST_CASE("small odd boards use the exact solver fallback") {
  for (int n : {3, 5, 7, 9, 11, 13}) {
    Graph g = make_path(n);
    CAPTURE(n);
    BreakerPathStrategy a(n);
    auto solver = std::make_shared<SymSolver>(g, Variant::sym);
    int value = solver->solve().value.rounds;
    OptimalStrategy b(solver, Player::B);
    Outcome out = play_sym(g, a, b);
    CHECK(a.used_fallback());
    CHECK(out.survived_rounds == value);
  }
}

TEST_CASE("path breaker validates its input") {
  CHECK_THROWS_AS(BreakerPathStrategy(14), std::invalid_argument);
  BreakerPathStrategy a(15);
  CHECK_THROWS_AS(a.begin(make_path(17), Player::A, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.begin(make_path(15), Player::B, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(a.begin(make_cycle(15), Player::A, Variant::sym, 0),
                  std::invalid_argument);
}
