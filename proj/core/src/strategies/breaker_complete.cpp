#include "symgame/strategies/breaker_complete.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

#include "symgame/isomorphism.hpp"

namespace symgame {

namespace {

// shared across instances: the bounded win-search explores the same
// positions over and over in exhaustive opponent enumeration
struct SearchCache {
  std::mutex mu;
  std::map<std::tuple<int, uint64_t, uint64_t, int>, bool> win;
  std::map<std::tuple<int, uint64_t, uint64_t>, bool> iso;
};

SearchCache& cache() {
  static SearchCache c;
  return c;
}

// complete graph on m vertices with a fixed edge order
int kedge(int m, int u, int v) {
  if (u > v) std::swap(u, v);
  // edges listed u-major: (0,1),(0,2)..(0,m-1),(1,2)..
  return u * m - u * (u + 1) / 2 + (v - u - 1);
}

struct Board {
  Graph graph;            // K_m
  std::vector<int> real;  // board vertex -> real vertex
  std::map<int, int> to_board;
  uint64_t red = 0, blue = 0;
  int m = 0;

  uint64_t insert(uint64_t mask, int bu, int bv) const {
    return mask | (1ull << kedge(m, bu, bv));
  }
};

bool iso_on_board(const Board& b, uint64_t red, uint64_t blue) {
  auto& c = cache();
  auto key = std::make_tuple(b.m, red, blue);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.iso.find(key); it != c.iso.end()) return it->second;
  }
  EdgeSet r(b.graph.edge_count()), l(b.graph.edge_count());
  for (int e = 0; e < b.graph.edge_count(); ++e) {
    if ((red >> e) & 1) r.insert(e);
    if ((blue >> e) & 1) l.insert(e);
  }
  bool ok = subgraphs_isomorphic(b.graph, r, l);
  std::lock_guard<std::mutex> lock(c.mu);
  c.iso.emplace(key, ok);
  return ok;
}

// can A force B into an isomorphism break within k more A moves?
bool wins_within(const Board& b, uint64_t red, uint64_t blue, int k) {
  if (k <= 0) return false;
  auto& c = cache();
  auto key = std::make_tuple(b.m, red, blue, k);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    if (auto it = c.win.find(key); it != c.win.end()) return it->second;
  }
  int total = b.graph.edge_count();
  uint64_t colored = red | blue;
  bool win = false;
  for (int a = 0; a < total && !win; ++a) {
    if ((colored >> a) & 1) continue;
    uint64_t nred = red | (1ull << a);
    bool reply_survives = false;
    for (int e = 0; e < total; ++e) {
      if (((nred | blue) >> e) & 1) continue;
      uint64_t nblue = blue | (1ull << e);
      if (!iso_on_board(b, nred, nblue)) continue;
      if (k == 1 || !wins_within(b, nred, nblue, k - 1)) {
        reply_survives = true;
        break;
      }
    }
    if (!reply_survives) win = true;
  }
  std::lock_guard<std::mutex> lock(c.mu);
  c.win.emplace(key, win);
  return win;
}

Board make_board(const SymState& state, int max_vertices) {
  const Graph& g = *state.graph;
  Board b;
  std::vector<bool> touched(g.vertex_count(), false);
  for (int e = 0; e < g.edge_count(); ++e)
    if (state.colored(e)) {
      auto [u, v] = g.edge(e);
      touched[u] = touched[v] = true;
    }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (touched[v]) b.real.push_back(v);
  for (int v = 0; v < g.vertex_count() &&
                  static_cast<int>(b.real.size()) < max_vertices;
       ++v)
    if (!touched[v]) b.real.push_back(v);
  std::sort(b.real.begin(), b.real.end());
  b.m = static_cast<int>(b.real.size());
  for (int i = 0; i < b.m; ++i) b.to_board[b.real[i]] = i;
  b.graph = make_complete(b.m);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!state.colored(e)) continue;
    auto [u, v] = g.edge(e);
    int be = kedge(b.m, b.to_board[u], b.to_board[v]);
    if (state.red.contains(e))
      b.red |= 1ull << be;
    else
      b.blue |= 1ull << be;
  }
  return b;
}

}  // namespace

std::string position_name(BreakerCompleteStrategy::Position p) {
  using P = BreakerCompleteStrategy::Position;
  switch (p) {
    case P::shared_center: return "shared-center";
    case P::leaves_center_two: return "center-and-two-leaves";
    case P::leaves_two_fresh: return "two-leaves-and-fresh";
    case P::leaves_center_one: return "center-leaf-and-fresh";
    case P::leaf_two_fresh: return "leaf-and-two-fresh";
    case P::other: return "other";
    case P::undetermined: return "undetermined";
  }
  return "?";
}

void BreakerCompleteStrategy::begin(const Graph& g, Player side, Variant,
                                    uint64_t) {
  if (side != Player::A)
    throw std::invalid_argument("breaker-kn: first-player strategy only");
  n_ = g.vertex_count();
  if (n_ < 6) throw std::invalid_argument("breaker-kn: needs K_n with n >= 6");
  for (int v = 0; v < n_; ++v)
    if (static_cast<int>(g.neighbors(v).size()) != n_ - 1)
      throw std::invalid_argument("breaker-kn: graph is not complete");
  g_ = &g;
  center_ = -1;
  leaves_.clear();
  position_ = Position::undetermined;
  blue_center_ = -1;
  blue_leaves_.clear();
  moves_made_ = 0;
  scripted_only_ = true;
  p5_u3_ = p5_v1_ = p5_v2_ = -1;
}

int BreakerCompleteStrategy::pick_leaf(const SymState& state, int k) {
  const Graph& g = *state.graph;
  std::vector<bool> red_touched(n_, false), blue_touched(n_, false);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (state.red.contains(e)) red_touched[u] = red_touched[v] = true;
    if (state.blue.contains(e)) blue_touched[u] = blue_touched[v] = true;
  }
  // does giving B the edge {x,y} break isomorphism right now, with A's
  // candidate star edge already placed?
  auto blocked = [&](const EdgeSet& red_after, int x, int y) {
    int e = g.edge_index(x, y);
    if (e < 0) return true;
    if (state.colored(e)) return true;  // not available to B at all
    EdgeSet blue_after = state.blue;
    blue_after.insert(e);
    return !subgraphs_isomorphic(g, red_after, blue_after);
  };

  // round 3 entangles with B's structure when B is building away from the
  // red star (fully disjoint, or hanging a star off the red center): take
  // a blue vertex as the third leaf so B has no spare fresh vertex
  bool entangle = k == 3;
  if (entangle) {
    bool disjoint = true, via_center = false;
    for (int v = 0; v < n_; ++v)
      if (blue_touched[v] && red_touched[v]) {
        disjoint = false;
        if (v == center_) via_center = true;
      }
    entangle = disjoint || via_center;
  }
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (int v = 0; v < n_; ++v) {
      if (red_touched[v]) continue;
      bool pref = entangle ? blue_touched[v] : !blue_touched[v];
      if ((pass == 0) == pref) order.push_back(v);
    }

  int fallback = -1;
  for (int v : order) {
    int e = g.edge_index(center_, v);
    if (e < 0 || state.colored(e)) continue;
    if (fallback == -1) fallback = v;
    EdgeSet red_after = state.red;
    red_after.insert(e);
    bool ok = true;
    for (int l : leaves_)
      if (!blocked(red_after, l, v)) ok = false;
    if (ok) return v;
  }
  return fallback;
}

void BreakerCompleteStrategy::classify(const SymState& state) {
  const Graph& g = *state.graph;
  // blue should be a 3-star if B is still alive
  std::vector<int> deg(n_, 0);
  std::vector<int> blue_vs;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!state.blue.contains(e)) continue;
    auto [u, v] = g.edge(e);
    deg[u]++;
    deg[v]++;
    blue_vs.push_back(u);
    blue_vs.push_back(v);
  }
  blue_center_ = -1;
  for (int v : blue_vs)
    if (deg[v] == 3) blue_center_ = v;
  if (blue_center_ == -1) {
    position_ = Position::other;
    return;
  }
  blue_leaves_.clear();
  for (int v : blue_vs)
    if (v != blue_center_ &&
        std::find(blue_leaves_.begin(), blue_leaves_.end(), v) ==
            blue_leaves_.end())
      blue_leaves_.push_back(v);
  std::sort(blue_leaves_.begin(), blue_leaves_.end());

  if (blue_center_ == center_) {
    position_ = Position::shared_center;
    return;
  }
  bool center_is_red = center_ == blue_center_ ||
                       std::find(leaves_.begin(), leaves_.end(), blue_center_) !=
                           leaves_.end();
  if (center_is_red) {  // blue centered on a red leaf: not in the catalog
    position_ = Position::other;
    return;
  }
  int has_center = 0, red_leaves = 0, fresh = 0;
  for (int v : blue_leaves_) {
    if (v == center_)
      ++has_center;
    else if (std::find(leaves_.begin(), leaves_.end(), v) != leaves_.end())
      ++red_leaves;
    else
      ++fresh;
  }
  if (has_center == 1 && red_leaves == 2)
    position_ = Position::leaves_center_two;
  else if (has_center == 0 && red_leaves == 2 && fresh == 1)
    position_ = Position::leaves_two_fresh;
  else if (has_center == 1 && red_leaves == 1 && fresh == 1)
    position_ = Position::leaves_center_one;
  else if (has_center == 0 && red_leaves == 1 && fresh == 2)
    position_ = Position::leaf_two_fresh;
  else
    position_ = Position::other;
}

int BreakerCompleteStrategy::scripted_move(const SymState& state, int k) {
  const Graph& g = *state.graph;
  auto free_edge = [&](int u, int v) {
    int e = g.edge_index(u, v);
    return (e >= 0 && !state.colored(e)) ? e : -1;
  };

  if (position_ == Position::leaves_center_two && k == 4) {
    // connect the two blue leaves that are red leaves: a red triangle
    // appears and every blue leaf pair is now colored
    std::vector<int> rl;
    for (int v : blue_leaves_)
      if (v != center_) rl.push_back(v);
    if (rl.size() == 2) return free_edge(rl[0], rl[1]);
    return -1;
  }

  if (position_ == Position::shared_center) {
    const auto& v = blue_leaves_;  // v_1..v_3, all fresh by construction
    if (v.size() != 3) return -1;
    if (k == 4) return free_edge(v[0], v[1]);
    if (k == 5) return free_edge(v[1], v[2]);
    if (k == 6 || k == 7) {
      // B's 4th and 5th moves: two triangle edges with a common vertex?
      if (k == 6 && state.history.size() >= 10) {
        int b4 = state.history[7], b5 = state.history[9];
        auto in_t = [&](int e) {
          auto [x, y] = g.edge(e);
          return std::find(leaves_.begin(), leaves_.end(), x) != leaves_.end() &&
                 std::find(leaves_.begin(), leaves_.end(), y) != leaves_.end();
        };
        if (in_t(b4) && in_t(b5)) {
          auto [a1, a2] = g.edge(b4);
          auto [b1, b2] = g.edge(b5);
          int common = (a1 == b1 || a1 == b2) ? a1 : ((a2 == b1 || a2 == b2) ? a2 : -1);
          if (common != -1) return free_edge(common, v[1]);
        }
      }
      // otherwise: two free edges of the red-leaf triangle
      for (size_t i = 0; i < leaves_.size(); ++i)
        for (size_t j = i + 1; j < leaves_.size(); ++j) {
          int e = free_edge(leaves_[i], leaves_[j]);
          if (e >= 0) return e;
        }
      return -1;
    }
  }

  if (position_ == Position::leaf_two_fresh) {
    if (k == 4) {
      for (int v : blue_leaves_)
        if (std::find(leaves_.begin(), leaves_.end(), v) != leaves_.end())
          p5_u3_ = v;
      std::vector<int> fr;
      for (int v : blue_leaves_)
        if (v != p5_u3_) fr.push_back(v);
      if (p5_u3_ == -1 || fr.size() != 2) return -1;
      p5_v2_ = fr[0];
      p5_v1_ = fr[1];
      return free_edge(p5_u3_, p5_v2_);
    }
    if (k == 5) return free_edge(p5_v2_, p5_v1_);
    if (k == 6 || k == 7) {
      auto in_t = [&](int e) {
        auto [x, y] = g.edge(e);
        return std::find(leaves_.begin(), leaves_.end(), x) != leaves_.end() &&
               std::find(leaves_.begin(), leaves_.end(), y) != leaves_.end();
      };
      if (state.history.size() < 10) return -1;
      int b4 = state.history[7], b5 = state.history[9];
      if (!(in_t(b4) && in_t(b5))) {
        for (size_t i = 0; i < leaves_.size(); ++i)
          for (size_t j = i + 1; j < leaves_.size(); ++j) {
            int e = free_edge(leaves_[i], leaves_[j]);
            if (e >= 0) return e;
          }
        return -1;
      }
      // B holds a blue path across the leaf triangle starting at u_3;
      // find its middle and far end
      auto [a1, a2] = g.edge(b4);
      auto [b1, b2] = g.edge(b5);
      int common = (a1 == b1 || a1 == b2) ? a1 : ((a2 == b1 || a2 == b2) ? a2 : -1);
      if (common == -1) return -1;
      int far = b1 == common ? b2 : b1;
      if (far == p5_u3_) far = a1 == common ? a2 : a1;
      if (k == 6) return free_edge(far, p5_v1_);
      return free_edge(common, p5_v1_);
    }
  }

  return -1;  // no script for this position / move number
}

int BreakerCompleteStrategy::search_move(const SymState& state) {
  const Graph& g = *state.graph;
  Board b = make_board(state, 10);
  int remaining = std::max(1, 7 - moves_made_);
  int total_free = 0;
  for (int e = 0; e < b.graph.edge_count(); ++e)
    if (!((b.red | b.blue) >> e & 1)) ++total_free;
  int cap = std::min(remaining + 2, (total_free + 1) / 2);

  for (int k = 1; k <= cap; ++k) {
    uint64_t colored = b.red | b.blue;
    for (int a = 0; a < b.graph.edge_count(); ++a) {
      if ((colored >> a) & 1) continue;
      uint64_t nred = b.red | (1ull << a);
      bool reply_survives = false;
      for (int e = 0; e < b.graph.edge_count(); ++e) {
        if (((nred | b.blue) >> e) & 1) continue;
        uint64_t nblue = b.blue | (1ull << e);
        if (!iso_on_board(b, nred, nblue)) continue;
        if (k == 1 || !wins_within(b, nred, nblue, k - 1)) {
          reply_survives = true;
          break;
        }
      }
      if (!reply_survives) {
        auto [bu, bv] = b.graph.edge(a);
        return g.edge_index(b.real[bu], b.real[bv]);
      }
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!state.colored(e)) return e;
  return -1;
}

int BreakerCompleteStrategy::choose(const SymState& state) {
  const Graph& g = *state.graph;
  int k = state.round + 1;  // this is A's k-th move
  ++moves_made_;

  if (k == 1) {
    center_ = 0;  // provisional; settled on move 2
    return g.edge_index(0, 1);
  }
  if (k == 2) {
    // settle the center: the endpoint of move 1 that B's reply touches
    // must be the center so leaf pairs stay blocked
    auto [p, q] = g.edge(state.history[0]);
    int b1 = state.history[1];
    auto [x, y] = g.edge(b1);
    center_ = (x == q || y == q) ? q : p;
    leaves_ = {center_ == p ? q : p};
    int leaf = pick_leaf(state, 2);
    if (leaf >= 0) {
      leaves_.push_back(leaf);
      return g.edge_index(center_, leaf);
    }
  }
  if (k == 3) {
    int leaf = pick_leaf(state, 3);
    if (leaf >= 0) {
      leaves_.push_back(leaf);
      return g.edge_index(center_, leaf);
    }
  }
  if (k >= 4) {
    if (position_ == Position::undetermined) classify(state);
    int e = scripted_move(state, k);
    if (e >= 0) return e;
  }
  scripted_only_ = false;
  return search_move(state);
}

}  // namespace symgame
