#include "doctest.h"

#include "symgame/graph.hpp"

using namespace symgame;

TEST_CASE("path factory numbering") {
  Graph p = make_path(5);
  CHECK(p.vertex_count() == 6);
  CHECK(p.edge_count() == 5);
  CHECK(p.family() == Family::path);
  for (int i = 0; i < 5; ++i) {
    auto [u, v] = p.edge(i);
    CHECK(u == i);
    CHECK(v == i + 1);
  }
  CHECK(p.edge_index(2, 3) == 2);
  CHECK(p.edge_index(0, 2) == -1);
}

TEST_CASE("cycle factory wraps") {
  Graph c = make_cycle(6);
  CHECK(c.vertex_count() == 6);
  CHECK(c.edge_count() == 6);
  CHECK(c.family() == Family::cycle);
  auto [u, v] = c.edge(5);
  CHECK(u == 0);
  CHECK(v == 5);
  CHECK(c.adjacent(0, 5));
  CHECK(c.neighbors(0).size() == 2);
}

TEST_CASE("complete and bipartite sizes") {
  Graph k5 = make_complete(5);
  CHECK(k5.edge_count() == 10);
  for (int v = 0; v < 5; ++v) CHECK(k5.neighbors(v).size() == 4);

  Graph k23 = make_complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);
  CHECK(k23.adjacent(0, 2));
  CHECK_FALSE(k23.adjacent(0, 1));
  CHECK_FALSE(k23.adjacent(2, 3));
}

TEST_CASE("create rejects malformed edges") {
  CHECK_THROWS_AS(Graph::create(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::create(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::create(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("line graph of a path is a shorter path") {
  Graph p = make_path(4);
  Graph l = line_graph(p);
  CHECK(l.vertex_count() == 4);
  CHECK(l.edge_count() == 3);
  CHECK(l.family() == Family::path);
  CHECK(l.adjacent(0, 1));
  CHECK_FALSE(l.adjacent(0, 2));
}

TEST_CASE("line graph of a cycle is the same cycle") {
  Graph c = make_cycle(5);
  Graph l = line_graph(c);
  CHECK(l.vertex_count() == 5);
  CHECK(l.edge_count() == 5);
  CHECK(l.family() == Family::cycle);
}

TEST_CASE("line graph of a star is complete") {
  Graph star = make_complete_bipartite(1, 3);
  Graph l = line_graph(star);
  CHECK(l.vertex_count() == 3);
  CHECK(l.edge_count() == 3);
}

TEST_CASE("edge set basics") {
  EdgeSet s(100);
  CHECK(s.empty());
  s.insert(3);
  s.insert(77);
  s.insert(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(77));
  CHECK_FALSE(s.contains(4));
  s.erase(3);
  CHECK(s.size() == 1);
  CHECK(s.to_vector() == std::vector<int>{77});

  EdgeSet t(100, {77, 5});
  CHECK(t.intersects(s));
  t.erase(77);
  CHECK_FALSE(t.intersects(s));
}

TEST_CASE("components of a scattered edge set") {
  Graph p = make_path(9);
  EdgeSet s(9, {0, 1, 4, 7});
  auto view = ComponentView::of(p, s);
  REQUIRE(view.components.size() == 3);
  CHECK(view.size_multiset() == std::vector<int>{1, 1, 2});
  const Component* big = nullptr;
  for (const auto& c : view.components)
    if (c.size() == 2) big = &c;
  REQUIRE(big != nullptr);
  CHECK(big->vertices == std::vector<int>{0, 1, 2});
  CHECK(big->contains_vertex(1));
  CHECK_FALSE(big->contains_vertex(4));
}

TEST_CASE("component distance on a path") {
  Graph p = make_path(9);
  EdgeSet s(9, {0, 1, 4, 7});
  auto view = ComponentView::of(p, s);
  // components: edges {0,1} (vertices 0..2), {4} (4..5), {7} (7..8)
  const auto& a = view.components[0];
  const auto& b = view.components[1];
  const auto& c = view.components[2];
  CHECK(component_distance(p, a, b) == 2);
  CHECK(component_distance(p, b, c) == 2);
  CHECK(component_distance(p, a, c) == 5);

  EdgeSet occupied(9, {0, 1, 3, 4, 7});
  auto d = component_distance(p, a, b, DistanceMode::unchosen_only, occupied);
  CHECK_FALSE(d.has_value());
}

TEST_CASE("component distance rejects overlap") {
  Graph p = make_path(5);
  EdgeSet s(5, {0, 1});
  EdgeSet t(5, {1, 2});
  auto va = ComponentView::of(p, s);
  auto vb = ComponentView::of(p, t);
  CHECK_THROWS_AS(component_distance(p, va.components[0], vb.components[0]),
                  std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::path, Family::cycle, Family::complete,
                   Family::complete_bipartite, Family::other}) {
    auto back = family_from_name(family_name(f));
    REQUIRE(back.has_value());
    CHECK(*back == f);
  }
  CHECK_FALSE(family_from_name("pentagon").has_value());
}
