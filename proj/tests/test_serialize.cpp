#include "doctest.h"

#include "symgame/serialize.hpp"
#include "symgame/strategies/catalog.hpp"
#include "symgame/strategies/heuristics.hpp"

using namespace symgame;

TEST_CASE("graph literals round-trip through JSON") {
  for (const Graph& g : {make_path(5), make_cycle(6), make_complete(4),
                         Graph::create(4, {{0, 1}, {2, 3}})}) {
    Graph back = graph_from_json(graph_to_json(g));
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
    CHECK(back.family() == g.family());
    CHECK(graph_to_json(back) == graph_to_json(g));
  }
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": 3}"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json("{\"vertices\": 3, \"edges\": [[0]]}"),
                  std::invalid_argument);
}

TEST_CASE("graph shorthand covers the families") {
  Graph p = parse_graph_spec("P5");
  CHECK(p.family() == Family::path);
  CHECK(p.edge_count() == 5);
  CHECK(parse_graph_spec("C6").family() == Family::cycle);
  CHECK(parse_graph_spec("K4").edge_count() == 6);
  CHECK(parse_graph_spec("K3,3").edge_count() == 9);
  Graph inline_g = parse_graph_spec("{\"vertices\":2,\"edges\":[[0,1]]}");
  CHECK(inline_g.edge_count() == 1);
  CHECK_THROWS_AS(parse_graph_spec("Q7"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_spec("P3,3"), std::invalid_argument);
}

TEST_CASE("transcripts round-trip and replay bit-exactly") {
  Graph g = make_path(8);
  RandomStrategy a, b;
  Transcript t;
  Outcome out = play_sym(g, a, b, Variant::sym, std::nullopt, 42, &t);
  std::string text = transcript_to_json(t, 2);
  Transcript back = transcript_from_json(text);
  CHECK(transcript_to_json(back, 2) == text);
  Outcome replayed = replay_transcript(back);
  CHECK(replayed.survived_rounds == out.survived_rounds);
  CHECK(replayed.winner == out.winner);
  CHECK(replayed.reason == out.reason);
}

TEST_CASE("every catalog strategy is constructible on a fitting graph") {
  for (const std::string& name : strategy_catalog()) {
    Graph g = name == "breaker-kn"      ? make_complete(6)
              : name == "bipartite-b"   ? make_complete_bipartite(3, 3)
              : name == "breaker-cycle" ? make_cycle(15)
              : name == "mirror"        ? make_path(4)
                                        : make_path(15);
    Player side = (name.rfind("breaker", 0) == 0 || name == "adversarial-random")
                      ? Player::A
                      : Player::B;
    if (name == "optimal") g = make_path(7);
    auto s = make_strategy(name, g, side);
    REQUIRE(s != nullptr);
    CHECK(s->name() == name);
  }
  CHECK_THROWS_AS(make_strategy("nope", make_path(4), Player::A),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("translated", make_complete(4), Player::B),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_strategy("mirror", make_path(5), Player::B),
                  std::invalid_argument);
}
