#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "symgame/isomorphism.hpp"

using namespace symgame;

namespace {

// Reference oracle: try every vertex bijection.
bool iso_all_bijections(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  std::vector<int> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges())
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

Graph random_graph(int n, double p, uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  uint64_t s = seed;
  auto rnd = [&s]() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return (s >> 11) * (1.0 / 9007199254740992.0);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rnd() < p) edges.emplace_back(u, v);
  return Graph::create(n, std::move(edges));
}

Graph relabel(const Graph& g, uint64_t seed) {
  std::vector<int> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t s = seed | 1;
  for (int i = g.vertex_count() - 1; i > 0; --i) {
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
    std::swap(perm[i], perm[s % (i + 1)]);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::create(g.vertex_count(), std::move(edges));
}

}  // namespace

TEST_CASE("graph isomorphism agrees with the all-bijections oracle") {
  for (int n = 2; n <= 6; ++n) {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
      Graph a = random_graph(n, 0.45, seed * 977 + n);
      Graph b = random_graph(n, 0.45, seed * 1933 + n);
      CHECK(graphs_isomorphic(a, b) == iso_all_bijections(a, b));
    }
  }
}

TEST_CASE("relabeling preserves isomorphism") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    Graph a = random_graph(7, 0.4, seed * 31);
    Graph b = relabel(a, seed * 101);
    CHECK(graphs_isomorphic(a, b));
  }
}

TEST_CASE("paths, cycles, stars distinguished") {
  CHECK(graphs_isomorphic(make_path(3), make_path(3)));
  CHECK_FALSE(graphs_isomorphic(make_path(3), make_cycle(4)));
  CHECK_FALSE(graphs_isomorphic(make_path(3), make_complete_bipartite(1, 3)));
  CHECK(graphs_isomorphic(make_cycle(3), make_complete(3)));
  CHECK(graphs_isomorphic(make_complete_bipartite(2, 2), make_cycle(4)));
}

TEST_CASE("edge subgraph relabels compactly") {
  Graph p = make_path(6);
  EdgeSet s(6, {4, 5});
  auto [sub, vmap] = edge_subgraph(p, s);
  CHECK(sub.vertex_count() == 3);
  CHECK(sub.edge_count() == 2);
  CHECK(vmap == std::vector<int>{4, 5, 6});
  CHECK(graphs_isomorphic(sub, make_path(2)));
}

TEST_CASE("subgraph isomorphism on a path uses component sizes") {
  Graph p = make_path(10);
  EdgeSet a(10, {0, 1, 5});
  EdgeSet b(10, {3, 7, 8});
  EdgeSet c(10, {2, 4, 6});
  CHECK(subgraphs_isomorphic(p, a, b));
  CHECK_FALSE(subgraphs_isomorphic(p, a, c));
  CHECK_FALSE(subgraphs_isomorphic(p, a, EdgeSet(10, {0, 1})));
}

TEST_CASE("subgraph isomorphism general case") {
  Graph k4 = make_complete(4);
  // triangle 0-1-2 vs star at 3
  EdgeSet tri(6), star(6);
  tri.insert(k4.edge_index(0, 1));
  tri.insert(k4.edge_index(1, 2));
  tri.insert(k4.edge_index(0, 2));
  star.insert(k4.edge_index(0, 3));
  star.insert(k4.edge_index(1, 3));
  star.insert(k4.edge_index(2, 3));
  CHECK_FALSE(subgraphs_isomorphic(k4, tri, star));

  EdgeSet tri2(6);
  tri2.insert(k4.edge_index(1, 2));
  tri2.insert(k4.edge_index(2, 3));
  tri2.insert(k4.edge_index(1, 3));
  CHECK(subgraphs_isomorphic(k4, tri, tri2));
}
