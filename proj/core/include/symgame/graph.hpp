#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symgame {

/// Thrown when an input is structurally valid but exceeds a configured
/// search or evaluation budget.
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { path, cycle, complete, complete_bipartite, other };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Undirected simple graph. Vertices are 0..vertex_count-1, edges are
/// indexed 0..edge_count()-1 in construction order. For paths and cycles
/// the edge order follows the end-to-end numbering convention: edge i
/// joins vertices i and i+1 (mod n for cycles). User-facing edge numbers
/// are 1-based; everything here is 0-based.
class Graph {
 public:
  Graph() = default;
  static Graph create(int vertex_count, std::vector<std::pair<int, int>> edges,
                      Family family = Family::other);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  Family family() const { return family_; }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::pair<int, int> edge(int e) const { return edges_.at(e); }

  /// Edge indices incident to vertex v.
  const std::vector<int>& incident_edges(int v) const { return vertex_edges_[v]; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;
  /// Index of edge {u,v}, or -1.
  int edge_index(int u, int v) const;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  Family family_ = Family::other;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> vertex_edges_;
};

Graph make_path(int edge_count);
Graph make_cycle(int edge_count);
Graph make_complete(int order);
Graph make_complete_bipartite(int m, int l);

/// Generic constructor used by the CLI: family plus 1-2 integer params.
Graph make_graph(Family family, const std::vector<int>& params);

/// Line graph of g. Vertex i of the result corresponds to edge i of g;
/// two vertices are adjacent iff the edges share an endpoint in g.
Graph line_graph(const Graph& g);

/// Subset of the edge-index range of a fixed graph. Constant-time
/// membership, O(words) iteration.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int range);
  EdgeSet(int range, std::initializer_list<int> edges);

  int range() const { return range_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(int e) const {
    return (words_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1u;
  }
  void insert(int e);
  void erase(int e);
  bool intersects(const EdgeSet& other) const;
  std::vector<int> to_vector() const;

  /// Low 64 bits; only meaningful when range <= 64.
  uint64_t low_bits() const { return words_.empty() ? 0 : words_[0]; }

  bool operator==(const EdgeSet& other) const = default;

 private:
  int range_ = 0;
  int count_ = 0;
  std::vector<uint64_t> words_;
};

/// One connected component of an edge-induced subgraph.
struct Component {
  std::vector<int> edges;     // ascending edge indices
  std::vector<int> vertices;  // ascending vertex ids
  int size() const { return static_cast<int>(edges.size()); }
  bool contains_vertex(int v) const;
};

/// Decomposition of an EdgeSet into connected components (isolated
/// vertices do not occur: every component has at least one edge).
struct ComponentView {
  std::vector<Component> components;
  static ComponentView of(const Graph& g, const EdgeSet& edges);
  /// Multiset of component edge-counts, ascending.
  std::vector<int> size_multiset() const;
};

enum class DistanceMode { standard, unchosen_only };

/// Minimum distance between vertices of two vertex-disjoint components.
/// In unchosen_only mode paths may not use occupied edges; nullopt means
/// unreachable. Throws std::invalid_argument if the components share a
/// vertex.
std::optional<int> component_distance(const Graph& g, const Component& a,
                                      const Component& b, DistanceMode mode,
                                      const EdgeSet& occupied);

inline std::optional<int> component_distance(const Graph& g, const Component& a,
                                             const Component& b) {
  return component_distance(g, a, b, DistanceMode::standard, EdgeSet(g.edge_count()));
}

}  // namespace symgame
