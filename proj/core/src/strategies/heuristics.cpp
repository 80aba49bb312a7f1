#include "symgame/strategies/heuristics.hpp"

#include <algorithm>

#include "symgame/isomorphism.hpp"

namespace symgame {

namespace {

std::vector<int> free_edges(const SymState& state) {
  std::vector<int> out;
  for (int e = 0; e < state.graph->edge_count(); ++e)
    if (!state.colored(e)) out.push_back(e);
  return out;
}

bool cheap_iso_check(const Graph& g) {
  return g.family() == Family::path || g.family() == Family::cycle ||
         g.edge_count() <= 64;
}

}  // namespace

void RandomStrategy::begin(const Graph&, Player, Variant, uint64_t seed) {
  rng_.seed(seed);
}

int RandomStrategy::choose(const SymState& state) {
  auto moves = free_edges(state);
  std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
  return moves[pick(rng_)];
}

void GreedyCopyStrategy::begin(const Graph&, Player side, Variant, uint64_t) {
  if (side != Player::B)
    throw std::invalid_argument("greedy-copy: second-player strategy only");
}

int GreedyCopyStrategy::choose(const SymState& state) {
  const Graph& g = *state.graph;
  int a = state.history.back();
  auto [au, av] = g.edge(a);

  // classify A's move against the red subgraph without his new edge
  EdgeSet red_before = state.red;
  red_before.erase(a);
  auto red_view = ComponentView::of(g, red_before);
  std::vector<const Component*> touched;
  for (const auto& c : red_view.components)
    if (c.contains_vertex(au) || c.contains_vertex(av)) touched.push_back(&c);

  auto blue_view = ComponentView::of(g, state.blue);
  auto blue_comp_at = [&](int v) -> const Component* {
    for (const auto& c : blue_view.components)
      if (c.contains_vertex(v)) return &c;
    return nullptr;
  };

  std::vector<int> candidates;
  auto push_fresh = [&] {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (state.colored(e)) continue;
      auto [u, v] = g.edge(e);
      if (!blue_comp_at(u) && !blue_comp_at(v)) candidates.push_back(e);
    }
  };
  auto push_extensions = [&](int size) {
    for (const auto& c : blue_view.components) {
      if (c.size() != size) continue;
      for (int v : c.vertices)
        for (int e : g.incident_edges(v)) {
          if (state.colored(e)) continue;
          auto [x, y] = g.edge(e);
          int other = x == v ? y : x;
          const Component* oc = blue_comp_at(other);
          if (oc == nullptr) candidates.push_back(e);  // proper extension, no merge
        }
    }
  };
  auto push_bridges = [&](int p, int q) {
    for (int e = 0; e < g.edge_count(); ++e) {
      if (state.colored(e)) continue;
      auto [u, v] = g.edge(e);
      const Component* cu = blue_comp_at(u);
      const Component* cv = blue_comp_at(v);
      if (!cu || !cv || cu == cv) continue;
      if ((cu->size() == p && cv->size() == q) || (cu->size() == q && cv->size() == p))
        candidates.push_back(e);
    }
  };

  if (touched.empty()) {
    push_fresh();
  } else if (touched.size() == 1) {
    push_extensions(touched[0]->size());
  } else {
    push_bridges(touched[0]->size(), touched[1]->size());
  }

  if (cheap_iso_check(g)) {
    for (int e : candidates) {
      EdgeSet blue_after = state.blue;
      blue_after.insert(e);
      if (subgraphs_isomorphic(g, state.red, blue_after)) return e;
    }
  } else if (!candidates.empty()) {
    return candidates.front();
  }
  auto moves = free_edges(state);
  return moves.front();
}

void AdversarialRandomStrategy::begin(const Graph&, Player side, Variant,
                                      uint64_t seed) {
  if (side != Player::A)
    throw std::invalid_argument("adversarial-random: first-player strategy only");
  rng_.seed(seed);
}

int AdversarialRandomStrategy::choose(const SymState& state) {
  const Graph& g = *state.graph;
  auto moves = free_edges(state);
  std::vector<int> touching;
  for (int e : moves) {
    auto [u, v] = g.edge(e);
    bool t = false;
    for (int ie : g.incident_edges(u))
      if (state.red.contains(ie)) t = true;
    for (int ie : g.incident_edges(v))
      if (state.red.contains(ie)) t = true;
    if (t) touching.push_back(e);
  }
  std::uniform_int_distribution<int> coin(0, 9);
  const std::vector<int>& pool =
      (!touching.empty() && coin(rng_) < 7) ? touching : moves;
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  return pool[pick(rng_)];
}

}  // namespace symgame
