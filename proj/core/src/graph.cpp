#include "tdm/graph.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace tdm {

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n), adj_(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (edge_between(u, v)) throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
  int e = m();
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  adj_[u].push_back({v, e});
  adj_[v].push_back({u, e});
  return e;
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return n_++;
}

std::optional<int> Graph::edge_between(int u, int v) const {
  if (u < 0 || u >= n_) return std::nullopt;
  for (const auto& inc : adj_[u])
    if (inc.nbr == v) return inc.edge;
  return std::nullopt;
}

std::uint64_t Graph::nbr_mask(int v) const {
  std::uint64_t m = 0;
  for (const auto& inc : adj_[v]) m |= 1ULL << inc.nbr;
  return m;
}

std::vector<int> components(const Graph& g, int* count) {
  std::vector<int> comp(g.n(), -1);
  int c = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.adj(v))
        if (comp[inc.nbr] == -1) {
          comp[inc.nbr] = c;
          stack.push_back(inc.nbr);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

bool is_connected(const Graph& g) {
  int c = 0;
  components(g, &c);
  return c <= 1;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> col(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (col[s] != -1) continue;
    col[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.adj(v)) {
        if (col[inc.nbr] == -1) {
          col[inc.nbr] = 1 - col[v];
          q.push(inc.nbr);
        } else if (col[inc.nbr] == col[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return col;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_bipartite_mask(const Graph& g, std::uint64_t mask) {
  if (g.n() > 64) throw CapExceeded("mask operations need at most 64 vertices");
  std::uint64_t seen = 0, side = 0;
  int stack[64];
  for (int s = 0; s < g.n(); ++s) {
    if (!((mask >> s) & 1) || ((seen >> s) & 1)) continue;
    seen |= 1ULL << s;
    int top = 0;
    stack[top++] = s;
    while (top) {
      int v = stack[--top];
      const bool sv = (side >> v) & 1;
      for (const auto& inc : g.adj(v)) {
        int u = inc.nbr;
        if (!((mask >> u) & 1)) continue;
        if ((seen >> u) & 1) {
          if (((side >> u) & 1) == sv) return false;
        } else {
          seen |= 1ULL << u;
          if (!sv) side |= 1ULL << u;
          stack[top++] = u;
        }
      }
    }
  }
  return true;
}

bool is_two_connected(const Graph& g) {
  if (g.n() < 3) return g.n() == 2 && g.m() == 1;
  if (!is_connected(g)) return false;
  // Tarjan low-link, iterative.
  std::vector<int> disc(g.n(), -1), low(g.n(), 0), parent(g.n(), -1);
  std::vector<std::size_t> it(g.n(), 0);
  int timer = 0, root_children = 0;
  std::vector<int> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    int v = stack.back();
    if (it[v] < g.adj(v).size()) {
      int u = g.adj(v)[it[v]++].nbr;
      if (disc[u] == -1) {
        parent[u] = v;
        disc[u] = low[u] = timer++;
        if (v == 0) ++root_children;
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
    } else {
      stack.pop_back();
      int p = parent[v];
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (p != 0 && low[v] >= disc[p]) return false;
      }
    }
  }
  return root_children <= 1;
}

Graph induced(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> pos(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(vertices.size()));
  for (const auto& [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) h.add_edge(pos[u], pos[v]);
  return h;
}

Graph induced_mask(const Graph& g, std::uint64_t mask, std::vector<int>* map) {
  std::vector<int> vs;
  for (int v = 0; v < g.n(); ++v)
    if ((mask >> v) & 1) vs.push_back(v);
  if (map) *map = vs;
  return induced(g, vs);
}

std::vector<int> shortest_path(const Graph& g, int s, int t) {
  std::vector<int> prev(g.n(), -2);
  std::queue<int> q;
  q.push(s);
  prev[s] = -1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == t) break;
    for (const auto& inc : g.adj(v))
      if (prev[inc.nbr] == -2) {
        prev[inc.nbr] = v;
        q.push(inc.nbr);
      }
  }
  if (prev[t] == -2) return {};
  std::vector<int> path;
  for (int v = t; v != -1; v = prev[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> odd_closed_walk_through(const Graph& g, int s) {
  // state = 2 * vertex + parity
  const int N = 2 * g.n();
  std::vector<int> prev(N, -2);
  std::queue<int> q;
  q.push(2 * s);
  prev[2 * s] = -1;
  const int target = 2 * s + 1;
  while (!q.empty() && prev[target] == -2) {
    int st = q.front();
    q.pop();
    int v = st / 2, par = st % 2;
    for (const auto& inc : g.adj(v)) {
      int ns = 2 * inc.nbr + (1 - par);
      if (prev[ns] == -2) {
        prev[ns] = st;
        q.push(ns);
      }
    }
  }
  if (prev[target] == -2) return {};
  std::vector<int> walk;
  for (int st = target; st != -1; st = prev[st]) walk.push_back(st / 2);
  std::reverse(walk.begin(), walk.end());
  return walk;
}

std::vector<int> edge_walk(const Graph& g, const std::vector<int>& vertex_walk) {
  std::vector<int> es;
  for (std::size_t i = 0; i + 1 < vertex_walk.size(); ++i) {
    auto e = g.edge_between(vertex_walk[i], vertex_walk[i + 1]);
    if (!e) throw std::invalid_argument("walk uses a non-edge");
    es.push_back(*e);
  }
  return es;
}

}  // namespace tdm
