#include "symgame/strategies/catalog.hpp"

#include <stdexcept>

#include "symgame/solver.hpp"
#include "symgame/strategies/bipartite.hpp"
#include "symgame/strategies/breaker_complete.hpp"
#include "symgame/strategies/breaker_cycle.hpp"
#include "symgame/strategies/breaker_path.hpp"
#include "symgame/strategies/heuristics.hpp"
#include "symgame/strategies/mirror.hpp"
#include "symgame/strategies/translated.hpp"

namespace symgame {

const std::vector<std::string>& strategy_catalog() {
  static const std::vector<std::string> names = {
      "mirror",     "translated",  "breaker-path",
      "breaker-cycle", "breaker-kn", "bipartite-b",
      "optimal",    "random",      "greedy-copy",
      "adversarial-random"};
  return names;
}

std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g,
                                        Player side, Variant variant) {
  if (name == "mirror")
    return std::make_unique<MirrorStrategy>(MirrorStrategy::for_graph(g));
  if (name == "translated") {
    if (g.family() == Family::path)
      return std::make_unique<TranslatedStrategy>(
          make_translated_for_path(g.edge_count()));
    if (g.family() == Family::cycle)
      return std::make_unique<TranslatedStrategy>(
          make_translated_for_cycle(g.edge_count()));
    throw std::invalid_argument(
        "translated strategy is built for path and cycle families only");
  }
  if (name == "breaker-path")
    return std::make_unique<BreakerPathStrategy>(g.edge_count());
  if (name == "breaker-cycle")
    return std::make_unique<BreakerCycleStrategy>(g.edge_count());
  if (name == "breaker-kn") return std::make_unique<BreakerCompleteStrategy>();
  if (name == "bipartite-b") return std::make_unique<BipartiteBStrategy>();
  if (name == "optimal")
    return std::make_unique<OptimalStrategy>(
        OptimalStrategy::make(g, side, variant));
  if (name == "random") return std::make_unique<RandomStrategy>();
  if (name == "greedy-copy") return std::make_unique<GreedyCopyStrategy>();
  if (name == "adversarial-random")
    return std::make_unique<AdversarialRandomStrategy>();
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

}  // namespace symgame
