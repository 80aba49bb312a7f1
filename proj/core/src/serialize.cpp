#include "symgame/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace symgame {

namespace {

using nlohmann::json;

json graph_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  json out;
  out["vertices"] = g.vertex_count();
  out["edges"] = std::move(edges);
  if (g.family() == Family::other)
    out["family"] = nullptr;
  else
    out["family"] = family_name(g.family());
  return out;
}

Graph graph_from(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph literal needs vertices and edges");
  std::vector<std::pair<int, int>> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw std::invalid_argument("each edge must be a [u,v] pair");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  Family fam = Family::other;
  if (j.contains("family") && !j.at("family").is_null()) {
    auto f = family_from_name(j.at("family").get<std::string>());
    if (!f) throw std::invalid_argument("unknown graph family");
    fam = *f;
  }
  return Graph::create(j.at("vertices").get<int>(), std::move(edges), fam);
}

Variant variant_from(const std::string& s) {
  if (s == "sym") return Variant::sym;
  if (s == "sym_plus" || s == "sym+") return Variant::sym_plus;
  throw std::invalid_argument("unknown variant '" + s + "'");
}

OutcomeReason reason_from(const std::string& s) {
  for (OutcomeReason r :
       {OutcomeReason::isomorphism_broken, OutcomeReason::all_edges_colored,
        OutcomeReason::round_limit, OutcomeReason::illegal_move})
    if (reason_name(r) == s) return r;
  throw std::invalid_argument("unknown outcome reason '" + s + "'");
}

std::string dump(const json& j, int indent) {
  return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

std::string graph_to_json(const Graph& g, int indent) {
  return dump(graph_json(g), indent);
}

Graph graph_from_json(const std::string& text) {
  return graph_from(json::parse(text));
}

std::string transcript_to_json(const Transcript& t, int indent) {
  json rounds = json::array();
  for (const Transcript::Round& r : t.rounds)
    rounds.push_back(
        {{"a_edge", r.a_edge}, {"b_edge", r.b_edge}, {"iso_ok", r.iso_ok}});
  json out;
  out["graph"] = graph_json(t.graph);
  out["variant"] = variant_name(t.variant);
  out["seed"] = t.seed;
  out["rounds"] = std::move(rounds);
  out["outcome"] = {{"survived_rounds", t.outcome.survived_rounds},
                    {"winner", player_name(t.outcome.winner)},
                    {"reason", reason_name(t.outcome.reason)}};
  return dump(out, indent);
}

Transcript transcript_from_json(const std::string& text) {
  json j = json::parse(text);
  Transcript t;
  t.graph = graph_from(j.at("graph"));
  t.variant = variant_from(j.at("variant").get<std::string>());
  t.seed = j.at("seed").get<uint64_t>();
  for (const json& r : j.at("rounds")) {
    Transcript::Round round;
    round.a_edge = r.at("a_edge").get<int>();
    round.b_edge = r.value("b_edge", -1);
    round.iso_ok = r.at("iso_ok").get<bool>();
    t.rounds.push_back(round);
  }
  const json& o = j.at("outcome");
  t.outcome.survived_rounds = o.at("survived_rounds").get<int>();
  t.outcome.winner =
      o.at("winner").get<std::string>() == "A" ? Player::A : Player::B;
  t.outcome.reason = reason_from(o.at("reason").get<std::string>());
  return t;
}

Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty graph spec");
  if (spec.front() == '{') return graph_from_json(spec);
  auto numeric = [](const std::string& s) {
    return !s.empty() &&
           s.find_first_not_of("0123456789,") == std::string::npos;
  };
  if ((spec.front() == 'P' || spec.front() == 'C' || spec.front() == 'K') &&
      numeric(spec.substr(1))) {
    std::string rest = spec.substr(1);
    size_t comma = rest.find(',');
    if (comma != std::string::npos) {
      if (spec.front() != 'K')
        throw std::invalid_argument("only K takes two parameters");
      return make_complete_bipartite(std::stoi(rest.substr(0, comma)),
                                     std::stoi(rest.substr(comma + 1)));
    }
    int p = std::stoi(rest);
    if (spec.front() == 'P') return make_path(p);
    if (spec.front() == 'C') return make_cycle(p);
    return make_complete(p);
  }
  std::ifstream in(spec);
  if (!in)
    throw std::invalid_argument("graph spec '" + spec +
                                "' is neither shorthand, JSON, nor a readable file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return graph_from_json(buf.str());
}

}  // namespace symgame
