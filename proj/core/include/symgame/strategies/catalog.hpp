#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symgame/game.hpp"

namespace symgame {

/// Names accepted by make_strategy.
const std::vector<std::string>& strategy_catalog();

/// Builds a strategy by catalog name for a game on g. Family-specific
/// strategies (translated, breaker-path, breaker-cycle, mirror) are
/// constructed from the graph here; side and variant suitability is
/// enforced by the strategy's own begin(). Throws std::invalid_argument
/// for unknown names or graphs the named strategy cannot be built for.
std::unique_ptr<Strategy> make_strategy(const std::string& name, const Graph& g,
                                        Player side,
                                        Variant variant = Variant::sym);

}  // namespace symgame
