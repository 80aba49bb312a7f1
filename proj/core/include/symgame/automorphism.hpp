#pragma once

#include <cstdint>
#include <utility>

#include "symgame/graph.hpp"

namespace symgame {

/// Bijection on the vertex indices of a fixed graph.
class VertexPermutation {
 public:
  VertexPermutation() = default;
  explicit VertexPermutation(std::vector<int> map);

  int operator()(int v) const { return map_[v]; }
  int size() const { return static_cast<int>(map_.size()); }
  const std::vector<int>& map() const { return map_; }

  bool is_automorphism(const Graph& g) const;
  bool is_involution() const;
  /// The induced edge map phi'({u,v}) = {phi(u),phi(v)} has no fixed edge.
  bool is_fixed_edge_free(const Graph& g) const;

  /// Image of edge e under the induced edge permutation; requires the
  /// permutation to be an automorphism of g.
  int edge_image(const Graph& g, int e) const;

 private:
  std::vector<int> map_;
};

/// Exhaustive backtracking search for an involutory automorphism whose
/// induced edge map has no fixed edge. Returns nullopt if none exists.
/// Throws CapabilityError above max_vertices.
std::optional<VertexPermutation> find_involutory_fixed_edge_free_automorphism(
    const Graph& g, int max_vertices = 16);

/// All automorphisms of g as induced edge permutations (identity first).
/// Intended for small graphs; throws CapabilityError above max_vertices.
std::vector<std::vector<int>> automorphism_edge_perms(const Graph& g,
                                                      int max_vertices = 8);

/// Memoization keys for game positions: two positions get equal keys iff
/// some automorphism of g maps (red, blue) to (red', blue') jointly.
/// Exact for graphs within the vertex limit, identity-only above it.
/// Graphs must have at most 32 edges.
class PositionCanonicalizer {
 public:
  explicit PositionCanonicalizer(const Graph& g, bool exact = true,
                                 int exact_vertex_limit = 8);

  size_t group_size() const { return edge_perms_.size(); }
  bool exact() const { return exact_; }

  uint64_t key(uint32_t red, uint32_t blue) const;
  /// Key for a half-round position with A's move pending.
  std::pair<uint64_t, uint64_t> key_with_pending(uint32_t red, uint32_t blue,
                                                 int pending) const;

 private:
  uint32_t apply(const std::vector<int>& perm, uint32_t mask) const;
  int edge_count_ = 0;
  bool exact_ = false;
  std::vector<std::vector<int>> edge_perms_;
};

/// Opaque position key equal across automorphism-equivalent positions.
std::pair<uint64_t, uint64_t> canonical_key(const Graph& g, const EdgeSet& red,
                                            const EdgeSet& blue);

}  // namespace symgame
