#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>

#include "symgame/graph.hpp"

namespace symgame {

enum class Player { A, B };
enum class Variant { sym, sym_plus };
enum class OutcomeReason { isomorphism_broken, all_edges_colored, round_limit, illegal_move };

inline Player opponent(Player p) { return p == Player::A ? Player::B : Player::A; }

std::string player_name(Player p);
std::string variant_name(Variant v);
std::string reason_name(OutcomeReason r);

struct Outcome {
  int survived_rounds = 0;
  Player winner = Player::B;
  OutcomeReason reason = OutcomeReason::all_edges_colored;
};

/// A round-to-round isomorphism witness for Sym+: a vertex bijection
/// between the red and blue subgraphs, stored as sorted (red vertex,
/// blue vertex) pairs.
using IsoWitness = std::vector<std::pair<int, int>>;

/// Full position of a Sym(G) / Sym+(G) game.
struct SymState {
  const Graph* graph = nullptr;
  EdgeSet red;
  EdgeSet blue;
  int round = 0;  // completed rounds
  Player to_move = Player::A;
  Variant variant = Variant::sym;
  std::vector<int> history;  // colored edges in move order (a1, b1, a2, ...)
  /// Sym+ only: all isomorphism chains consistent with every completed round.
  std::set<IsoWitness> iso_witnesses;

  bool colored(int e) const { return red.contains(e) || blue.contains(e); }
  std::vector<int> uncolored_edges() const;
};

/// Move-selection contract: stateful per game, deterministic given seed.
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual void begin(const Graph& g, Player side, Variant variant, uint64_t seed) = 0;
  /// Produce one uncolored edge; called only when it is this side's turn.
  virtual int choose(const SymState& state) = 0;
};

struct Transcript {
  struct Round {
    int a_edge = -1;  // 1-based edge numbers, matching the CLI convention
    int b_edge = -1;
    bool iso_ok = false;
  };
  Graph graph;
  Variant variant = Variant::sym;
  uint64_t seed = 0;
  std::vector<Round> rounds;
  Outcome outcome;
};

/// Extensions of witness frontier by the round (a, b); empty when no
/// chain survives.
std::set<IsoWitness> extend_witnesses(const Graph& g, const EdgeSet& red,
                                      const EdgeSet& blue,
                                      const std::set<IsoWitness>& frontier,
                                      int a_edge, int b_edge);

Outcome play_sym(const Graph& g, Strategy& strat_a, Strategy& strat_b,
                 Variant variant = Variant::sym,
                 std::optional<int> round_limit = std::nullopt, uint64_t seed = 0,
                 Transcript* transcript = nullptr);

/// Re-run a transcript's moves through the referee; the outcome must
/// reproduce bit-exactly.
Outcome replay_transcript(const Transcript& t);

/// Terminal play: prompts the human for 1-based edge numbers, validates,
/// and prints the colored state after each move.
Outcome interactive_play(const Graph& g, Player human_side, Strategy& machine,
                         Variant variant, std::istream& in, std::ostream& out,
                         uint64_t seed = 0);

}  // namespace symgame
