#pragma once

#include "symgame/graph.hpp"

namespace symgame {

/// Isomorphism test for two small graphs (backtracking with degree and
/// component pruning). Intended for instances up to ~15 edges.
bool graphs_isomorphic(const Graph& a, const Graph& b);

/// Are the edge-induced subgraphs of g given by e1 and e2 isomorphic?
/// Isolated vertices are ignored. Path/cycle families take the fast
/// route via component size multisets; general graphs backtrack.
bool subgraphs_isomorphic(const Graph& g, const EdgeSet& e1, const EdgeSet& e2);

/// The edge-induced subgraph as a standalone graph, with touched
/// vertices relabeled 0..k-1. vertex_map[i] is the original id.
std::pair<Graph, std::vector<int>> edge_subgraph(const Graph& g, const EdgeSet& edges);

}  // namespace symgame
