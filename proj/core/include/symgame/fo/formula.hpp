#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "symgame/graph.hpp"

namespace symgame::fo {

enum class Kind {
  forall,
  exists,
  edge,     // E(x,y)
  equal,    // x = y
  lnot,
  land,     // n-ary
  lor,      // n-ary
  implies,
  iff,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable first-order formula over the vocabulary {E, =} with vertex
/// variables. Quantifier and negation nodes have one child, implication
/// and biconditional two, conjunction and disjunction any number >= 2.
struct Formula {
  Kind kind{};
  std::string var;   // quantified variable, or left atom argument
  std::string var2;  // right atom argument
  std::vector<FormulaPtr> kids;
};

FormulaPtr forall(std::string var, FormulaPtr body);
FormulaPtr exists(std::string var, FormulaPtr body);
FormulaPtr edge(std::string x, std::string y);
FormulaPtr equal(std::string x, std::string y);
FormulaPtr lnot(FormulaPtr f);
/// Single-element input collapses to the element itself; empty input is
/// rejected.
FormulaPtr land(std::vector<FormulaPtr> fs);
FormulaPtr lor(std::vector<FormulaPtr> fs);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);

/// Total number of quantifier occurrences.
int quantifier_count(const FormulaPtr& f);

/// Free variables in first-occurrence order; closed formulas return {}.
std::vector<std::string> free_variables(const FormulaPtr& f);

/// Parenthesized prefix text: (forall x ...), (exists x ...), (E x y),
/// (= x y), (not ...), (and f1 f2 ...), (or f1 f2 ...), (imp a b),
/// (iff a b). Round-trips through parse_formula.
std::string to_text(const FormulaPtr& f);
FormulaPtr parse_formula(const std::string& text);

/// The sentence whose truth on a graph with at least 2k edges is
/// equivalent to the first player needing at least k rounds to win the
/// symmetry game: prefix forall u_{j,1} forall u_{j,2} exists v_{j,1}
/// exists v_{j,2} for j = 1..k, body (and of A_j) -> (and of B_j and
/// ISO_j). A_j says the u-pair is a fresh edge, B_j the same for the
/// v-pair, and ISO_j that some pairing of the two edge sequences is a
/// partial isomorphism. Throws CapabilityError for k > 3: the ISO_k
/// disjunction has k! * 2^k members and is materialized in full.
FormulaPtr build_phi_k(int k);

/// The ISO_j disjunction alone (open formula over u_{i,a}, v_{i,a},
/// i <= j): one disjunct per permutation f of {1..j}x{1,2} that maps
/// paired positions to paired positions, each disjunct a conjunction of
/// biconditionals u_{i,a} = u_{i',a'} <-> v_{f(i,a)} = v_{f(i',a')}
/// over all position pairs.
FormulaPtr build_iso(int j);

/// Tarskian truth by recursive expansion of quantifiers over the vertex
/// set. Throws std::invalid_argument on free variables and
/// CapabilityError when |V|^quantifier_count exceeds the assignment
/// budget.
bool evaluate(const FormulaPtr& f, const Graph& g,
              uint64_t assignment_budget = 200'000'000);

/// Seeded pool of random closed sentences with bounded nesting depth and
/// at most max_quantifiers quantifiers each. A sanity probe, not a
/// complete sentence enumeration.
std::vector<FormulaPtr> random_sentence_pool(int count, int max_quantifiers,
                                             int max_depth, uint64_t seed);

}  // namespace symgame::fo
