#include "symgame/game.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "symgame/isomorphism.hpp"

namespace symgame {

std::string player_name(Player p) { return p == Player::A ? "A" : "B"; }

std::string variant_name(Variant v) { return v == Variant::sym ? "sym" : "sym_plus"; }

std::string reason_name(OutcomeReason r) {
  switch (r) {
    case OutcomeReason::isomorphism_broken: return "isomorphism_broken";
    case OutcomeReason::all_edges_colored: return "all_edges_colored";
    case OutcomeReason::round_limit: return "round_limit";
    case OutcomeReason::illegal_move: return "illegal_move";
  }
  return "?";
}

std::vector<int> SymState::uncolored_edges() const {
  std::vector<int> out;
  for (int e = 0; e < graph->edge_count(); ++e)
    if (!colored(e)) out.push_back(e);
  return out;
}

namespace {

std::vector<int> subgraph_vertices(const Graph& g, const EdgeSet& edges) {
  std::set<int> verts;
  for (int e : edges.to_vector()) {
    auto [u, v] = g.edge(e);
    verts.insert(u);
    verts.insert(v);
  }
  return {verts.begin(), verts.end()};
}

// Does the completed vertex map carry every red edge to a blue edge?
bool witness_ok(const Graph& g, const EdgeSet& red, const EdgeSet& blue,
                const std::map<int, int>& map) {
  for (int e : red.to_vector()) {
    auto [u, v] = g.edge(e);
    int image = g.edge_index(map.at(u), map.at(v));
    if (image < 0 || !blue.contains(image)) return false;
  }
  return true;
}

}  // namespace

std::set<IsoWitness> extend_witnesses(const Graph& g, const EdgeSet& red,
                                      const EdgeSet& blue,
                                      const std::set<IsoWitness>& frontier,
                                      int a_edge, int b_edge) {
  // red/blue already include the round's edges.
  auto red_verts = subgraph_vertices(g, red);
  auto blue_verts = subgraph_vertices(g, blue);
  std::set<IsoWitness> next;
  if (red_verts.size() != blue_verts.size()) return next;

  auto extend_all = [&](const IsoWitness& base) {
    std::map<int, int> map(base.begin(), base.end());
    std::set<int> used;
    for (auto [r, b] : base) used.insert(b);
    std::vector<int> missing;
    for (int v : red_verts)
      if (!map.count(v)) missing.push_back(v);
    std::vector<int> pool;
    for (int v : blue_verts)
      if (!used.count(v)) pool.push_back(v);
    if (missing.size() != pool.size()) return;

    // Small: at most two new vertices per round.
    std::sort(pool.begin(), pool.end());
    do {
      auto full = map;
      for (size_t i = 0; i < missing.size(); ++i) full[missing[i]] = pool[i];
      if (witness_ok(g, red, blue, full)) next.insert(IsoWitness(full.begin(), full.end()));
    } while (std::next_permutation(pool.begin(), pool.end()));
  };

  if (frontier.empty() && red.size() == 1) {
    extend_all({});
  } else {
    for (const auto& w : frontier) extend_all(w);
  }
  (void)a_edge;
  (void)b_edge;
  return next;
}

Outcome play_sym(const Graph& g, Strategy& strat_a, Strategy& strat_b,
                 Variant variant, std::optional<int> round_limit, uint64_t seed,
                 Transcript* transcript) {
  int max_rounds = g.edge_count() / 2;
  int limit = round_limit.value_or(max_rounds);
  limit = std::min(limit, max_rounds);

  SymState state;
  state.graph = &g;
  state.red = EdgeSet(g.edge_count());
  state.blue = EdgeSet(g.edge_count());
  state.variant = variant;

  strat_a.begin(g, Player::A, variant, seed);
  strat_b.begin(g, Player::B, variant, seed);

  if (transcript) {
    transcript->graph = g;
    transcript->variant = variant;
    transcript->seed = seed;
    transcript->rounds.clear();
  }

  Outcome outcome;
  auto finish = [&](int survived, Player winner, OutcomeReason reason) {
    outcome = {survived, winner, reason};
    if (transcript) transcript->outcome = outcome;
    return outcome;
  };

  for (int r = 0; r < limit; ++r) {
    state.to_move = Player::A;
    int a = strat_a.choose(state);
    if (a < 0 || a >= g.edge_count() || state.colored(a)) {
      if (transcript) transcript->rounds.push_back({a + 1, 0, false});
      return finish(r, Player::B, OutcomeReason::illegal_move);
    }
    state.red.insert(a);
    state.history.push_back(a);
    state.to_move = Player::B;

    int b = strat_b.choose(state);
    if (b < 0 || b >= g.edge_count() || state.colored(b)) {
      if (transcript) transcript->rounds.push_back({a + 1, b + 1, false});
      return finish(r, Player::A, OutcomeReason::illegal_move);
    }
    state.blue.insert(b);
    state.history.push_back(b);
    state.round = r + 1;
    state.to_move = Player::A;

    bool iso_ok;
    if (variant == Variant::sym) {
      iso_ok = subgraphs_isomorphic(g, state.red, state.blue);
    } else {
      state.iso_witnesses =
          extend_witnesses(g, state.red, state.blue, state.iso_witnesses, a, b);
      iso_ok = !state.iso_witnesses.empty();
    }
    if (transcript) transcript->rounds.push_back({a + 1, b + 1, iso_ok});
    if (!iso_ok) return finish(r, Player::A, OutcomeReason::isomorphism_broken);
  }

  if (limit == max_rounds)
    return finish(limit, Player::B, OutcomeReason::all_edges_colored);
  return finish(limit, Player::B, OutcomeReason::round_limit);
}

namespace {

/// Feeds pre-recorded moves back to the referee.
class ScriptedStrategy : public Strategy {
 public:
  explicit ScriptedStrategy(std::vector<int> edges) : edges_(std::move(edges)) {}
  std::string name() const override { return "scripted"; }
  void begin(const Graph&, Player, Variant, uint64_t) override { next_ = 0; }
  int choose(const SymState&) override {
    if (next_ >= edges_.size()) return -1;
    return edges_[next_++];
  }

 private:
  std::vector<int> edges_;
  size_t next_ = 0;
};

}  // namespace

Outcome replay_transcript(const Transcript& t) {
  std::vector<int> a_moves, b_moves;
  for (const auto& r : t.rounds) {
    a_moves.push_back(r.a_edge - 1);
    if (r.b_edge > 0) b_moves.push_back(r.b_edge - 1);
  }
  ScriptedStrategy sa(std::move(a_moves)), sb(std::move(b_moves));
  return play_sym(t.graph, sa, sb, t.variant, std::nullopt, t.seed, nullptr);
}

namespace {

void print_state(const Graph& g, const SymState& state, std::ostream& out) {
  out << "edges:";
  for (int e = 0; e < g.edge_count(); ++e) {
    char mark = state.red.contains(e) ? 'R' : state.blue.contains(e) ? 'B' : '.';
    out << ' ' << (e + 1) << mark;
  }
  out << '\n';
}

std::optional<int> prompt_edge(const Graph& g, const SymState& state,
                               std::istream& in, std::ostream& out) {
  std::string line;
  while (true) {
    out << "your edge (1-" << g.edge_count() << "): " << std::flush;
    if (!std::getline(in, line)) return std::nullopt;
    std::istringstream ss(line);
    int n = 0;
    if (!(ss >> n) || n < 1 || n > g.edge_count()) {
      out << "not an edge number, try again\n";
      continue;
    }
    if (state.colored(n - 1)) {
      out << "edge " << n << " is already colored, pick an uncolored one\n";
      continue;
    }
    return n - 1;
  }
}

class HumanStrategy : public Strategy {
 public:
  HumanStrategy(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  std::string name() const override { return "human"; }
  void begin(const Graph&, Player, Variant, uint64_t) override {}
  int choose(const SymState& state) override {
    print_state(*state.graph, state, out_);
    auto e = prompt_edge(*state.graph, state, in_, out_);
    return e.value_or(-1);  // EOF aborts via illegal-move path
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

}  // namespace

Outcome interactive_play(const Graph& g, Player human_side, Strategy& machine,
                         Variant variant, std::istream& in, std::ostream& out,
                         uint64_t seed) {
  HumanStrategy human(in, out);
  Transcript t;
  Outcome o = human_side == Player::A
                  ? play_sym(g, human, machine, variant, std::nullopt, seed, &t)
                  : play_sym(g, machine, human, variant, std::nullopt, seed, &t);
  out << "game over: winner " << player_name(o.winner) << " after "
      << o.survived_rounds << " rounds (" << reason_name(o.reason) << ")\n";
  return o;
}

}  // namespace symgame
