#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "symgame/ef_solver.hpp"
#include "symgame/fo/formula.hpp"
#include "symgame/solver.hpp"

using namespace symgame;
using namespace symgame::fo;

namespace {

// all graphs on exactly nv labeled vertices, one representative per
// isomorphism class (canonical = lexicographically least edge mask)
std::vector<Graph> graph_classes(int nv) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < nv; ++u)
    for (int v = u + 1; v < nv; ++v) slots.push_back({u, v});
  std::vector<int> perm(nv);
  std::vector<Graph> out;
  int m = static_cast<int>(slots.size());
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::iota(perm.begin(), perm.end(), 0);
    bool canonical = true;
    do {
      int mapped = 0;
      for (int s = 0; s < m; ++s) {
        if (!((mask >> s) & 1)) continue;
        int u = perm[slots[s].first], v = perm[slots[s].second];
        if (u > v) std::swap(u, v);
        for (int t = 0; t < m; ++t)
          if (slots[t] == std::make_pair(u, v)) {
            mapped |= 1 << t;
            break;
          }
      }
      if (mapped < mask) {
        canonical = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!canonical) continue;
    std::vector<std::pair<int, int>> edges;
    for (int s = 0; s < m; ++s)
      if ((mask >> s) & 1) edges.push_back(slots[s]);
    out.push_back(Graph::create(nv, edges));
  }
  return out;
}

}  // namespace

TEST_CASE("the round-k sentence has 4k quantifiers") {
  CHECK(quantifier_count(build_phi_k(1)) == 4);
  CHECK(quantifier_count(build_phi_k(2)) == 8);
  CHECK(quantifier_count(build_phi_k(3)) == 12);
  CHECK(quantifier_count(edge("x", "y")) == 0);
}

TEST_CASE("the iso disjunction enumerates the pairing-respecting permutations") {
  CHECK(build_iso(1)->kids.size() == 2);
  CHECK(build_iso(2)->kids.size() == 8);
  CHECK(build_iso(3)->kids.size() == 48);
  CHECK_THROWS_AS(build_iso(4), CapabilityError);
  CHECK_THROWS_AS(build_phi_k(4), CapabilityError);
  CHECK_THROWS_AS(build_phi_k(0), std::invalid_argument);
}

TEST_CASE("evaluation matches hand-checked sentences") {
  Graph p2 = make_path(2);
  CHECK(evaluate(build_phi_k(1), p2));
  Graph p5 = make_path(5);
  bool expected = solve_sym(p5).value.rounds >= 2;
  CHECK(evaluate(build_phi_k(2), p5) == expected);
  Graph edgeless = Graph::create(3, {});
  FormulaPtr some_edge = exists("x", exists("y", edge("x", "y")));
  CHECK_FALSE(evaluate(some_edge, edgeless));
  CHECK(evaluate(some_edge, p2));
}

TEST_CASE("evaluation rejects open formulas and oversized expansions") {
  Graph p2 = make_path(2);
  CHECK_THROWS_AS(evaluate(edge("x", "y"), p2), std::invalid_argument);
  CHECK(free_variables(edge("x", "y")) == std::vector<std::string>{"x", "y"});
  CHECK(free_variables(build_phi_k(2)).empty());
  CHECK_THROWS_AS(evaluate(build_phi_k(2), make_complete(4), 100),
                  CapabilityError);
}

TEST_CASE("text form round-trips through the parser") {
  FormulaPtr some_edge = exists("x", exists("y", edge("x", "y")));
  CHECK(to_text(some_edge) == "(exists x (exists y (E x y)))");
  for (const FormulaPtr& f :
       {build_phi_k(1), build_phi_k(2), some_edge,
        forall("a", implies(equal("a", "a"), lnot(edge("a", "a"))))}) {
    std::string text = to_text(f);
    CHECK(to_text(parse_formula(text)) == text);
  }
  for (const FormulaPtr& f : random_sentence_pool(25, 3, 4, 99)) {
    std::string text = to_text(f);
    CHECK(to_text(parse_formula(text)) == text);
  }
  CHECK_THROWS_AS(parse_formula("(forall x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(frob x y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_formula("(E x y) junk"), std::invalid_argument);
}

TEST_CASE("the sentence value agrees with the solver on small graphs") {
  // representatives of every isomorphism class suffice: both sides are
  // isomorphism-invariant
  for (int nv = 1; nv <= 5; ++nv) {
    for (const Graph& g : graph_classes(nv)) {
      for (int k : {1, 2}) {
        if (g.edge_count() < 2 * k) continue;
        CAPTURE(nv);
        CAPTURE(k);
        CAPTURE(g.edge_count());
        bool lhs = evaluate(build_phi_k(k), g);
        bool rhs = solve_sym(g).value.rounds >= k;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("low-quantifier sentences cannot split close path pairs") {
  for (int n = 2; n <= 6; ++n) {
    Graph g0 = make_path(n);
    Graph g1 = make_path(n + 1);
    int rounds = solve_ef(g0, g1).value.rounds;
    CAPTURE(n);
    REQUIRE(rounds >= 1);
    for (const FormulaPtr& f : random_sentence_pool(60, rounds, 4, 12345)) {
      REQUIRE(quantifier_count(f) <= rounds);
      CHECK(evaluate(f, g0) == evaluate(f, g1));
    }
  }
}
