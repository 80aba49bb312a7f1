#include "symgame/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace symgame {

std::string family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::other: return "other";
  }
  return "other";
}

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "other") return Family::other;
  return std::nullopt;
}

Graph Graph::create(int vertex_count, std::vector<std::pair<int, int>> edges,
                    Family family) {
  if (vertex_count < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
  }
  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.family_ = family;
  g.adjacency_.resize(vertex_count);
  g.vertex_edges_.resize(vertex_count);
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges_[e];
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
    g.vertex_edges_[u].push_back(e);
    g.vertex_edges_[v].push_back(e);
  }
  return g;
}

bool Graph::adjacent(int u, int v) const {
  const auto& ns = adjacency_[u];
  return std::find(ns.begin(), ns.end(), v) != ns.end();
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int e : vertex_edges_[u])
    if (edges_[e] == std::make_pair(u, v)) return e;
  return -1;
}

Graph make_path(int edge_count) {
  if (edge_count < 1) throw std::invalid_argument("path needs at least one edge");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, i + 1);
  return Graph::create(edge_count + 1, std::move(edges), Family::path);
}

Graph make_cycle(int edge_count) {
  if (edge_count < 3) throw std::invalid_argument("cycle needs at least three edges");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < edge_count; ++i) edges.emplace_back(i, (i + 1) % edge_count);
  return Graph::create(edge_count, std::move(edges), Family::cycle);
}

Graph make_complete(int order) {
  if (order < 1) throw std::invalid_argument("complete graph needs positive order");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v) edges.emplace_back(u, v);
  return Graph::create(order, std::move(edges), Family::complete);
}

Graph make_complete_bipartite(int m, int l) {
  if (m < 1 || l < 1) throw std::invalid_argument("bipartite classes must be nonempty");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < l; ++v) edges.emplace_back(u, m + v);
  return Graph::create(m + l, std::move(edges), Family::complete_bipartite);
}

Graph make_graph(Family family, const std::vector<int>& params) {
  switch (family) {
    case Family::path:
      if (params.size() != 1) throw std::invalid_argument("path takes one parameter");
      return make_path(params[0]);
    case Family::cycle:
      if (params.size() != 1) throw std::invalid_argument("cycle takes one parameter");
      return make_cycle(params[0]);
    case Family::complete:
      if (params.size() != 1) throw std::invalid_argument("complete takes one parameter");
      return make_complete(params[0]);
    case Family::complete_bipartite:
      if (params.size() != 2)
        throw std::invalid_argument("complete_bipartite takes two parameters");
      return make_complete_bipartite(params[0], params[1]);
    case Family::other:
      throw std::invalid_argument("family 'other' has no parametric constructor");
  }
  throw std::invalid_argument("unknown family");
}

Graph line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw std::invalid_argument("line graph of empty graph");
  std::vector<std::pair<int, int>> edges;
  for (int e1 = 0; e1 < g.edge_count(); ++e1) {
    auto [a, b] = g.edge(e1);
    for (int e2 = e1 + 1; e2 < g.edge_count(); ++e2) {
      auto [c, d] = g.edge(e2);
      if (a == c || a == d || b == c || b == d) edges.emplace_back(e1, e2);
    }
  }
  Family fam = Family::other;
  if (g.family() == Family::cycle) fam = Family::cycle;
  if (g.family() == Family::path && g.edge_count() >= 2) fam = Family::path;
  return Graph::create(g.edge_count(), std::move(edges), fam);
}

EdgeSet::EdgeSet(int range) : range_(range), words_((range + 63) / 64, 0) {}

EdgeSet::EdgeSet(int range, std::initializer_list<int> edges) : EdgeSet(range) {
  for (int e : edges) insert(e);
}

void EdgeSet::insert(int e) {
  if (e < 0 || e >= range_) throw std::invalid_argument("edge index out of range");
  uint64_t& w = words_[static_cast<size_t>(e) >> 6];
  uint64_t bit = 1ull << (e & 63);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void EdgeSet::erase(int e) {
  if (e < 0 || e >= range_) throw std::invalid_argument("edge index out of range");
  uint64_t& w = words_[static_cast<size_t>(e) >> 6];
  uint64_t bit = 1ull << (e & 63);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  size_t n = std::min(words_.size(), other.words_.size());
  for (size_t i = 0; i < n; ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<int> EdgeSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count_);
  for (int e = 0; e < range_; ++e)
    if (contains(e)) out.push_back(e);
  return out;
}

bool Component::contains_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

ComponentView ComponentView::of(const Graph& g, const EdgeSet& edges) {
  ComponentView view;
  std::vector<bool> edge_done(g.edge_count(), false);
  for (int start = 0; start < g.edge_count(); ++start) {
    if (!edges.contains(start) || edge_done[start]) continue;
    Component comp;
    std::queue<int> frontier;
    frontier.push(start);
    edge_done[start] = true;
    std::set<int> verts;
    while (!frontier.empty()) {
      int e = frontier.front();
      frontier.pop();
      comp.edges.push_back(e);
      auto [u, v] = g.edge(e);
      verts.insert(u);
      verts.insert(v);
      for (int w : {u, v}) {
        for (int e2 : g.incident_edges(w)) {
          if (edges.contains(e2) && !edge_done[e2]) {
            edge_done[e2] = true;
            frontier.push(e2);
          }
        }
      }
    }
    std::sort(comp.edges.begin(), comp.edges.end());
    comp.vertices.assign(verts.begin(), verts.end());
    view.components.push_back(std::move(comp));
  }
  return view;
}

std::vector<int> ComponentView::size_multiset() const {
  std::vector<int> sizes;
  sizes.reserve(components.size());
  for (const auto& c : components) sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::optional<int> component_distance(const Graph& g, const Component& a,
                                      const Component& b, DistanceMode mode,
                                      const EdgeSet& occupied) {
  for (int v : a.vertices)
    if (b.contains_vertex(v)) throw std::invalid_argument("components overlap");

  // Multi-source BFS from a's vertices.
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  for (int v : a.vertices) {
    dist[v] = 0;
    q.push(v);
  }
  std::optional<int> best;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (b.contains_vertex(v)) {
      best = dist[v];
      break;
    }
    for (int e : g.incident_edges(v)) {
      if (mode == DistanceMode::unchosen_only && occupied.contains(e)) continue;
      auto [x, y] = g.edge(e);
      int w = x == v ? y : x;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return best;
}

}  // namespace symgame
