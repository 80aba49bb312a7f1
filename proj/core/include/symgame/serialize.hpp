#pragma once

#include <string>

#include "symgame/game.hpp"
#include "symgame/graph.hpp"

namespace symgame {

/// Graph literal: {"vertices": n, "edges": [[u,v],...], "family": s|null}.
std::string graph_to_json(const Graph& g, int indent = -1);
Graph graph_from_json(const std::string& text);

/// Transcript: {"graph": ..., "variant": ..., "seed": ..., "rounds":
/// [{"a_edge", "b_edge", "iso_ok"}], "outcome": {"survived_rounds",
/// "winner", "reason"}}. Edge numbers are 1-based. Round-trips and
/// replays bit-exactly.
std::string transcript_to_json(const Transcript& t, int indent = -1);
Transcript transcript_from_json(const std::string& text);

/// Shorthand accepted on the command line: P<edges>, C<edges>, K<order>,
/// K<m>,<l>, a path to a graph JSON file, or an inline JSON literal.
Graph parse_graph_spec(const std::string& spec);

}  // namespace symgame
