#include "symgame/automorphism.hpp"

#include <algorithm>
#include <bit>

namespace symgame {

VertexPermutation::VertexPermutation(std::vector<int> map) : map_(std::move(map)) {
  std::vector<bool> hit(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= static_cast<int>(map_.size()) || hit[v])
      throw std::invalid_argument("not a permutation");
    hit[v] = true;
  }
}

bool VertexPermutation::is_automorphism(const Graph& g) const {
  if (g.vertex_count() != size()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(map_[u], map_[v])) return false;
  return true;
}

bool VertexPermutation::is_involution() const {
  for (int v = 0; v < size(); ++v)
    if (map_[map_[v]] != v) return false;
  return true;
}

bool VertexPermutation::is_fixed_edge_free(const Graph& g) const {
  for (auto [u, v] : g.edges()) {
    int iu = map_[u], iv = map_[v];
    if ((iu == u && iv == v) || (iu == v && iv == u)) return false;
  }
  return true;
}

int VertexPermutation::edge_image(const Graph& g, int e) const {
  auto [u, v] = g.edge(e);
  int image = g.edge_index(map_[u], map_[v]);
  if (image < 0) throw std::invalid_argument("permutation is not an automorphism");
  return image;
}

namespace {

// Pairs vertices up (or fixes them) so that the final map is an
// involutory automorphism; adjacency is checked against all decided
// vertices, fixed edges are excluded as soon as a pair is formed.
struct InvolutionSearch {
  const Graph& g;
  std::vector<int> map;

  explicit InvolutionSearch(const Graph& g_) : g(g_), map(g_.vertex_count(), -1) {}

  bool adjacency_ok(int v) const {
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (map[w] < 0 || w == v) continue;
      if (g.adjacent(v, w) != g.adjacent(map[v], map[w])) return false;
    }
    return true;
  }

  bool search() {
    int v = -1;
    for (int i = 0; i < g.vertex_count(); ++i)
      if (map[i] < 0) { v = i; break; }
    if (v < 0) return true;

    // Fixed point: allowed unless it would fix an edge together with an
    // already fixed neighbor.
    bool fixable = true;
    for (int w : g.neighbors(v))
      if (map[w] == w) { fixable = false; break; }
    if (fixable) {
      map[v] = v;
      if (adjacency_ok(v) && search()) return true;
      map[v] = -1;
    }
    for (int w = v + 1; w < g.vertex_count(); ++w) {
      if (map[w] >= 0) continue;
      if (g.adjacent(v, w)) continue;  // swapping adjacent pair fixes the edge
      if (g.incident_edges(v).size() != g.incident_edges(w).size()) continue;
      map[v] = w;
      map[w] = v;
      if (adjacency_ok(v) && adjacency_ok(w) && search()) return true;
      map[v] = -1;
      map[w] = -1;
    }
    return false;
  }
};

void enumerate_automorphisms(const Graph& g, std::vector<int>& map,
                             std::vector<bool>& used, int depth,
                             std::vector<std::vector<int>>& out) {
  int n = g.vertex_count();
  if (depth == n) {
    std::vector<int> edge_perm(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.edge(e);
      int image = g.edge_index(map[u], map[v]);
      if (image < 0) return;
      edge_perm[e] = image;
    }
    out.push_back(std::move(edge_perm));
    return;
  }
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    if (g.incident_edges(depth).size() != g.incident_edges(w).size()) continue;
    bool ok = true;
    for (int prev = 0; prev < depth && ok; ++prev)
      if (g.adjacent(depth, prev) != g.adjacent(w, map[prev])) ok = false;
    if (!ok) continue;
    map[depth] = w;
    used[w] = true;
    enumerate_automorphisms(g, map, used, depth + 1, out);
    used[w] = false;
  }
}

}  // namespace

std::optional<VertexPermutation> find_involutory_fixed_edge_free_automorphism(
    const Graph& g, int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw CapabilityError("involution search limited to " +
                          std::to_string(max_vertices) + " vertices");
  InvolutionSearch search(g);
  if (!search.search()) return std::nullopt;
  VertexPermutation perm(search.map);
  // Non-identity is implied: an identity map fixes every edge, and the
  // graph has at least one edge whenever the search can return it; a
  // fully-fixed map on an edgeless graph is still involutory and
  // trivially fixed-edge-free.
  return perm;
}

std::vector<std::vector<int>> automorphism_edge_perms(const Graph& g,
                                                      int max_vertices) {
  if (g.vertex_count() > max_vertices)
    throw CapabilityError("automorphism enumeration limited to " +
                          std::to_string(max_vertices) + " vertices");
  std::vector<std::vector<int>> out;
  std::vector<int> map(g.vertex_count(), -1);
  std::vector<bool> used(g.vertex_count(), false);
  enumerate_automorphisms(g, map, used, 0, out);
  // Deduplicate edge permutations (vertex automorphisms may induce the
  // same edge map) and put identity first.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::vector<int> identity(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) identity[e] = e;
  auto it = std::find(out.begin(), out.end(), identity);
  if (it != out.begin() && it != out.end()) std::iter_swap(out.begin(), it);
  return out;
}

PositionCanonicalizer::PositionCanonicalizer(const Graph& g, bool exact,
                                             int exact_vertex_limit)
    : edge_count_(g.edge_count()) {
  if (edge_count_ > 32)
    throw CapabilityError("position keys support at most 32 edges");
  if (exact && g.vertex_count() <= exact_vertex_limit) {
    edge_perms_ = automorphism_edge_perms(g, exact_vertex_limit);
    exact_ = true;
  } else {
    std::vector<int> identity(edge_count_);
    for (int e = 0; e < edge_count_; ++e) identity[e] = e;
    edge_perms_ = {identity};
    exact_ = false;
  }
}

uint32_t PositionCanonicalizer::apply(const std::vector<int>& perm,
                                      uint32_t mask) const {
  uint32_t out = 0;
  while (mask) {
    int e = std::countr_zero(mask);
    mask &= mask - 1;
    out |= 1u << perm[e];
  }
  return out;
}

uint64_t PositionCanonicalizer::key(uint32_t red, uint32_t blue) const {
  uint64_t best = ~0ull;
  for (const auto& perm : edge_perms_) {
    uint64_t k = (static_cast<uint64_t>(apply(perm, red)) << 32) | apply(perm, blue);
    best = std::min(best, k);
  }
  return best;
}

std::pair<uint64_t, uint64_t> PositionCanonicalizer::key_with_pending(
    uint32_t red, uint32_t blue, int pending) const {
  uint64_t best = ~0ull;
  uint64_t best_pending = ~0ull;
  for (const auto& perm : edge_perms_) {
    uint64_t k = (static_cast<uint64_t>(apply(perm, red)) << 32) | apply(perm, blue);
    uint64_t p = static_cast<uint64_t>(perm[pending]);
    if (k < best || (k == best && p < best_pending)) {
      best = k;
      best_pending = p;
    }
  }
  return {best, best_pending};
}

std::pair<uint64_t, uint64_t> canonical_key(const Graph& g, const EdgeSet& red,
                                            const EdgeSet& blue) {
  if (red.intersects(blue)) throw std::invalid_argument("red and blue overlap");
  PositionCanonicalizer canon(g);
  return {canon.key(static_cast<uint32_t>(red.low_bits()),
                    static_cast<uint32_t>(blue.low_bits())),
          0};
}

}  // namespace symgame
