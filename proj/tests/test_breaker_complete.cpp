#include "doctest.h"

#include <map>

#include "symgame/isomorphism.hpp"
#include "symgame/strategies/breaker_complete.hpp"
#include "symgame/strategies/heuristics.hpp"

using namespace symgame;

namespace {

struct ExhaustResult {
  int max_rounds = 0;       // longest B survival over every reply sequence
  long long leaves = 0;     // terminal positions visited
  bool catalog_ok = true;   // round-3 position always one of the five shapes
  bool legal_ok = true;     // every A move was legal
};

struct IsoCache {
  std::map<std::pair<uint64_t, uint64_t>, bool> memo;
  bool ok(const Graph& g, const EdgeSet& red, const EdgeSet& blue) {
    auto key = std::make_pair(red.low_bits(), blue.low_bits());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool r = subgraphs_isomorphic(g, red, blue);
    memo.emplace(key, r);
    return r;
  }
};

// walk every B reply sequence against a fresh strategy instance per node
void explore(const Graph& g, std::vector<int>& b_moves, int max_depth,
             IsoCache& iso, ExhaustResult& res) {
  BreakerCompleteStrategy a;
  a.begin(g, Player::A, Variant::sym, 0);
  SymState st;
  st.graph = &g;
  st.red = EdgeSet(g.edge_count());
  st.blue = EdgeSet(g.edge_count());
  for (int b : b_moves) {
    int am = a.choose(st);
    st.red.insert(am);
    st.history.push_back(am);
    st.blue.insert(b);
    st.history.push_back(b);
    st.round++;
  }
  int am = a.choose(st);
  if (am < 0 || am >= g.edge_count() || st.colored(am)) {
    res.legal_ok = false;
    return;
  }
  st.red.insert(am);
  st.history.push_back(am);
  if (b_moves.size() == 3 &&
      (a.position() == BreakerCompleteStrategy::Position::other ||
       a.position() == BreakerCompleteStrategy::Position::undetermined))
    res.catalog_ok = false;

  std::vector<int> replies;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (st.colored(e)) continue;
    EdgeSet blue = st.blue;
    blue.insert(e);
    if (iso.ok(g, st.red, blue)) replies.push_back(e);
  }
  if (replies.empty()) {
    // B cannot answer A's move number round+1
    res.max_rounds = std::max(res.max_rounds, st.round + 1);
    res.leaves++;
    return;
  }
  if (static_cast<int>(b_moves.size()) + 1 >= max_depth) {
    // B survived past the depth we are verifying
    res.max_rounds = std::max(res.max_rounds, max_depth + 1);
    res.leaves++;
    return;
  }
  for (int b : replies) {
    b_moves.push_back(b);
    explore(g, b_moves, max_depth, iso, res);
    b_moves.pop_back();
  }
}

ExhaustResult exhaust(const Graph& g, int max_depth) {
  IsoCache iso;
  ExhaustResult res;
  std::vector<int> b_moves;
  explore(g, b_moves, max_depth, iso, res);
  return res;
}

}  // namespace

TEST_CASE("breaker on K_6 defeats every reply sequence within 7 moves") {
  ExhaustResult res = exhaust(make_complete(6), 7);
  CHECK(res.legal_ok);
  CHECK(res.catalog_ok);
  CHECK(res.max_rounds <= 7);
  CHECK(res.leaves > 0);
}

TEST_CASE("breaker on K_7 defeats every reply sequence within 7 moves") {
  ExhaustResult res = exhaust(make_complete(7), 7);
  CHECK(res.legal_ok);
  CHECK(res.catalog_ok);
  CHECK(res.max_rounds <= 7);
}

TEST_CASE("breaker on larger boards vs heuristic opponents") {
  for (int n : {8, 10}) {
    Graph g = make_complete(n);
    for (uint64_t seed = 0; seed < 3; ++seed) {
      BreakerCompleteStrategy a;
      GreedyCopyStrategy b;
      Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, seed);
      CHECK(out.winner == Player::A);
      CHECK(a.moves_made() <= 7);
    }
  }
}

TEST_CASE("breaker opens on the first edge and validates input") {
  Graph g = make_complete(6);
  BreakerCompleteStrategy a;
  a.begin(g, Player::A, Variant::sym, 0);
  SymState st;
  st.graph = &g;
  st.red = EdgeSet(g.edge_count());
  st.blue = EdgeSet(g.edge_count());
  CHECK(a.choose(st) == g.edge_index(0, 1));

  BreakerCompleteStrategy bad;
  CHECK_THROWS_AS(bad.begin(make_complete(5), Player::A, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad.begin(make_path(6), Player::A, Variant::sym, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(bad.begin(g, Player::B, Variant::sym, 0),
                  std::invalid_argument);
}
