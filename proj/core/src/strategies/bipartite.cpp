#include "symgame/strategies/bipartite.hpp"

#include <queue>

namespace symgame {

void BipartiteBStrategy::begin(const Graph& g, Player side, Variant, uint64_t) {
  if (side != Player::B)
    throw std::invalid_argument("bipartite-b: second-player strategy only");

  // recover the bipartition by 2-coloring and check completeness
  int n = g.vertex_count();
  cls_.assign(n, -1);
  std::queue<int> bfs;
  for (int s = 0; s < n; ++s) {
    if (cls_[s] != -1) continue;
    cls_[s] = 0;
    bfs.push(s);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      for (int w : g.neighbors(v)) {
        if (cls_[w] == -1) {
          cls_[w] = 1 - cls_[v];
          bfs.push(w);
        } else if (cls_[w] == cls_[v]) {
          throw std::invalid_argument("bipartite-b: graph is not bipartite");
        }
      }
    }
  }
  int size[2] = {0, 0};
  for (int v = 0; v < n; ++v) ++size[cls_[v]];
  for (int v = 0; v < n; ++v)
    if (static_cast<int>(g.neighbors(v).size()) != size[1 - cls_[v]])
      throw std::invalid_argument("bipartite-b: graph is not complete bipartite");
  if (size[0] % 2 == 0 || size[1] % 2 == 0)
    throw std::invalid_argument("bipartite-b: both class sizes must be odd");

  paired_class_ = size[0] >= size[1] ? 0 : 1;
  partner_.assign(n, -1);
  guaranteed_ = (std::max(size[0], size[1]) - 1) / 2;
  g_ = &g;
}

int BipartiteBStrategy::choose(const SymState& state) {
  const Graph& g = *state.graph;
  int a = state.history.back();
  auto [x, y] = g.edge(a);
  if (cls_[y] != paired_class_) std::swap(x, y);  // y lies in the paired class

  if (partner_[y] == -1) {
    // pair y with an untouched, unpaired vertex of its class
    int fresh = -1;
    for (int v = 0; v < g.vertex_count() && fresh == -1; ++v) {
      if (cls_[v] != paired_class_ || v == y || partner_[v] != -1) continue;
      bool touched = false;
      for (int e : g.incident_edges(v))
        if (state.colored(e)) touched = true;
      if (!touched) fresh = v;
    }
    if (fresh == -1) {
      if (state.round < guaranteed_)
        throw std::runtime_error(
            "bipartite-b: pairing pool exhausted in round " +
            std::to_string(state.round + 1) + " of a guaranteed " +
            std::to_string(guaranteed_));
      // past the guarantee: any legal move
      for (int e = 0; e < g.edge_count(); ++e)
        if (!state.colored(e)) return e;
    }
    partner_[y] = fresh;
    partner_[fresh] = y;
  }
  return g.edge_index(x, partner_[y]);
}

}  // namespace symgame
