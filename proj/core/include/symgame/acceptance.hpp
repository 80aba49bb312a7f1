#pragma once

#include <functional>
#include <string>
#include <vector>

namespace symgame {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // measured values, or the first recorded failure
  double elapsed_seconds = 0.0;
};

using CriterionObserver = std::function<void(const CriterionResult&)>;

/// Runs the full acceptance suite in order, invoking the observer as each
/// criterion finishes. Results cover: exact even path/cycle values with
/// the mirror check, minimax duality on the corpus, EF folklore bounds,
/// the translated lower-bound strategy, the path breaker's round bound,
/// the complete-graph breaker, the round-k sentence against the solver,
/// the sym-EF inequality, the bipartite bound, variant ordering, and the
/// isomorphism oracle agreement.
std::vector<CriterionResult> run_acceptance(const CriterionObserver& observer = {});

}  // namespace symgame
