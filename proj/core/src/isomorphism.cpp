#include "symgame/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace symgame {

namespace {

// Backtracking vertex-map extension. Both graphs already passed the
// degree-multiset check; vertices are visited in an order that keeps the
// mapped part connected where possible.
struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> map_ab;  // a-vertex -> b-vertex or -1
  std::vector<int> map_ba;

  IsoSearch(const Graph& a_, const Graph& b_)
      : a(a_), b(b_), map_ab(a_.vertex_count(), -1), map_ba(b_.vertex_count(), -1) {}

  bool consistent(int va, int vb) const {
    if (a.incident_edges(va).size() != b.incident_edges(vb).size()) return false;
    for (int na : a.neighbors(va)) {
      if (map_ab[na] >= 0 && !b.adjacent(vb, map_ab[na])) return false;
    }
    for (int nb : b.neighbors(vb)) {
      if (map_ba[nb] >= 0 && !a.adjacent(va, map_ba[nb])) return false;
    }
    return true;
  }

  bool extend(int depth) {
    if (depth == a.vertex_count()) return true;
    // Prefer a vertex adjacent to the mapped region.
    int va = -1;
    for (int v = 0; v < a.vertex_count(); ++v) {
      if (map_ab[v] >= 0) continue;
      bool touches = false;
      for (int nv : a.neighbors(v))
        if (map_ab[nv] >= 0) { touches = true; break; }
      if (touches) { va = v; break; }
      if (va < 0) va = v;
    }
    for (int vb = 0; vb < b.vertex_count(); ++vb) {
      if (map_ba[vb] >= 0 || !consistent(va, vb)) continue;
      map_ab[va] = vb;
      map_ba[vb] = va;
      if (extend(depth + 1)) return true;
      map_ab[va] = -1;
      map_ba[vb] = -1;
    }
    return false;
  }
};

std::vector<int> degree_multiset(const Graph& g) {
  std::vector<int> degs;
  degs.reserve(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    degs.push_back(static_cast<int>(g.incident_edges(v).size()));
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<int> component_sizes(const Graph& g) {
  EdgeSet all(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) all.insert(e);
  return ComponentView::of(g, all).size_multiset();
}

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  if (degree_multiset(a) != degree_multiset(b)) return false;
  if (component_sizes(a) != component_sizes(b)) return false;
  IsoSearch search(a, b);
  return search.extend(0);
}

std::pair<Graph, std::vector<int>> edge_subgraph(const Graph& g, const EdgeSet& edges) {
  std::map<int, int> relabel;
  std::vector<int> vertex_map;
  std::vector<std::pair<int, int>> sub_edges;
  for (int e : edges.to_vector()) {
    auto [u, v] = g.edge(e);
    for (int w : {u, v}) {
      if (!relabel.count(w)) {
        relabel[w] = static_cast<int>(vertex_map.size());
        vertex_map.push_back(w);
      }
    }
    sub_edges.emplace_back(relabel[u], relabel[v]);
  }
  if (vertex_map.empty()) vertex_map.push_back(0);  // placeholder vertex
  Graph sub = Graph::create(static_cast<int>(vertex_map.size()), std::move(sub_edges));
  return {std::move(sub), std::move(vertex_map)};
}

bool subgraphs_isomorphic(const Graph& g, const EdgeSet& e1, const EdgeSet& e2) {
  if (e1.size() != e2.size()) return false;
  if (e1.size() == 0) return true;
  if (g.family() == Family::path || g.family() == Family::cycle) {
    // Edge-induced subgraphs of paths/cycles are disjoint unions of
    // paths (or the full cycle, in which case the sets coincide), so
    // the component size multiset decides.
    return ComponentView::of(g, e1).size_multiset() ==
           ComponentView::of(g, e2).size_multiset();
  }
  auto [a, va] = edge_subgraph(g, e1);
  auto [b, vb] = edge_subgraph(g, e2);
  return graphs_isomorphic(a, b);
}

}  // namespace symgame
