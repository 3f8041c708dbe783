#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tdm {

using Edge = std::pair<int, int>;

// Simple undirected graph; edges keep their insertion index.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}
  Graph(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[e]; }

  struct Incidence {
    int nbr;
    int edge;
  };
  const std::vector<Incidence>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Returns the edge index; throws on loops and parallel edges.
  int add_edge(int u, int v);
  int add_vertex();
  std::optional<int> edge_between(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_between(u, v).has_value(); }
  int other(int e, int v) const { return edges_[e].first == v ? edges_[e].second : edges_[e].first; }

  // Neighbourhood bitmask (n <= 64 only).
  std::uint64_t nbr_mask(int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

// Component id per vertex, ids numbered by smallest vertex.
std::vector<int> components(const Graph& g, int* count = nullptr);
bool is_connected(const Graph& g);

// 0/1 colouring with the smallest vertex of each component coloured 0.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
// Bipartiteness of the subgraph induced by the vertex mask (n <= 64).
bool is_bipartite_mask(const Graph& g, std::uint64_t mask);

bool is_two_connected(const Graph& g);

// Induced subgraph; map[new] = old.
Graph induced(const Graph& g, const std::vector<int>& vertices);
Graph induced_mask(const Graph& g, std::uint64_t mask, std::vector<int>* map = nullptr);

// Vertex sequence of a shortest path (BFS, smallest-index tie-break), empty if none.
std::vector<int> shortest_path(const Graph& g, int s, int t);

// Shortest odd closed walk through s, via BFS on the bipartite double cover.
// Returned as vertex sequence v0 = s, ..., vk = s with k odd; empty if none.
std::vector<int> odd_closed_walk_through(const Graph& g, int s);

std::vector<int> edge_walk(const Graph& g, const std::vector<int>& vertex_walk);

}  // namespace tdm
