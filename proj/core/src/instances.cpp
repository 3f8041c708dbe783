#include "tdm/instances.hpp"

#include "tdm/errors.hpp"
#include "tdm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace tdm {

namespace {

// Vertices of G lying on some 6-cycle, as cycles (sorted vertex lists).
std::vector<std::vector<int>> six_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if (path.size() == 6) {
      if (g.adjacent(v, start) && path[1] < path[5]) {
        auto c = path;
        std::sort(c.begin(), c.end());
        out.push_back(c);
      }
      return;
    }
    for (const auto& inc : g.adj(v)) {
      int w = inc.nbr;
      if (w <= start || on[w]) continue;
      on[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on[w] = 0;
    }
  };
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on[s] = 1;
    dfs(dfs, s, s);
    on[s] = 0;
  }
  return out;
}

}  // namespace

Wall elementary_wall(int h) {
  if (h < 2) throw PreconditionError("elementary_wall: height must be at least 2");
  const int cols = 2 * h;
  auto removed_vertical = [&](int x, int y) {
    // edge (x, y) - (x, y + 1)
    if (x % 2 == 1 && y % 2 == 1) return (y + 1) / 2 <= h / 2;
    if (x % 2 == 0 && y % 2 == 0) return y / 2 <= (h - 1) / 2;
    return false;
  };
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> es;
  for (int y = 1; y <= h; ++y)
    for (int x = 1; x <= cols; ++x) {
      if (x < cols) es.push_back({{x, y}, {x + 1, y}});
      if (y < h && !removed_vertical(x, y)) es.push_back({{x, y}, {x, y + 1}});
    }
  std::map<std::pair<int, int>, int> deg;
  for (const auto& [a, b] : es) {
    ++deg[a];
    ++deg[b];
  }
  std::vector<std::pair<int, int>> drop;
  for (int y = 1; y <= h; ++y)
    for (int x = 1; x <= cols; ++x)
      if (deg[{x, y}] <= 1) drop.push_back({x, y});
  if (drop.size() != 2) throw std::logic_error("elementary_wall: expected two vertices of degree at most one");

  Wall w;
  w.h = h;
  std::map<std::pair<int, int>, int> id;
  for (int y = 1; y <= h; ++y)
    for (int x = 1; x <= cols; ++x)
      if (std::find(drop.begin(), drop.end(), std::make_pair(x, y)) == drop.end()) {
        id[{x, y}] = static_cast<int>(w.coord.size());
        w.coord.push_back({x, y});
      }
  w.g = Graph(static_cast<int>(w.coord.size()));
  for (const auto& [a, b] : es)
    if (id.count(a) && id.count(b)) w.g.add_edge(id[a], id[b]);

  // Q_k climbs on columns 2k-1 and 2k
  for (int k = 1; k <= h; ++k) {
    std::vector<int> q;
    for (int y = 1; y <= h; ++y) {
      int in = y == 1 ? -1 : ((y - 1) % 2 == 1 ? 2 * k : 2 * k - 1);
      int out = y == h ? -1 : (y % 2 == 1 ? 2 * k : 2 * k - 1);
      if (in < 0) {
        q.push_back(id.at({out, y}));
      } else if (out < 0 || out == in) {
        q.push_back(id.at({in, y}));
      } else {
        q.push_back(id.at({in, y}));
        q.push_back(id.at({out, y}));
      }
    }
    w.vertical.push_back(q);
  }
  for (int y = h; y >= 1; --y) {
    int lo = cols + 1, hi = 0;
    for (int v : w.vertical.front())
      if (w.coord[v].second == y) lo = std::min(lo, w.coord[v].first);
    for (int v : w.vertical.back())
      if (w.coord[v].second == y) hi = std::max(hi, w.coord[v].first);
    std::vector<int> p;
    for (int x = lo; x <= hi; ++x) p.push_back(id.at({x, y}));
    w.horizontal.push_back(p);
  }
  return w;
}

Wall escher_wall(int h) {
  if (h < 3) throw PreconditionError("escher_wall: height must be at least 3");
  Wall w = elementary_wall(h);
  auto col = bipartition(w.g);
  if (!col) throw std::logic_error("escher_wall: base wall is not bipartite");
  auto bricks = six_cycles(w.g);
  auto vid = [&](int x, int y) {
    for (int v = 0; v < w.g.n(); ++v)
      if (w.coord[v] == std::make_pair(x, y)) return v;
    throw std::logic_error("escher_wall: missing wall vertex");
  };
  // verticals of the top brick row sit on even columns when h - 1 is odd
  const int top_shift = (h - 1) % 2 == 1 ? 0 : -1;
  auto brick_of = [&](int v) {
    std::vector<std::size_t> hits;
    for (std::size_t b = 0; b < bricks.size(); ++b)
      if (std::binary_search(bricks[b].begin(), bricks[b].end(), v)) hits.push_back(b);
    return hits;
  };
  for (int i = 1; i <= h - 1; ++i) {
    int top = vid(2 * i + 1 + top_shift, h);
    int bottom = vid(2 * (h - i) + 1, 1);
    // each endpoint lies in exactly one brick: the i-th top / (h-i)-th bottom one
    auto bt = brick_of(top), bb = brick_of(bottom);
    if (bt.size() != 1 || bb.size() != 1)
      throw PreconditionError("escher_wall: linking path endpoint lies in more than one brick");
    int xl = 2 * i + top_shift;
    for (int x : {xl, xl + 1, xl + 2})
      if (!std::binary_search(bricks[bt[0]].begin(), bricks[bt[0]].end(), vid(x, h)))
        throw std::logic_error("escher_wall: top endpoint is not in the intended brick");
    for (int x : {2 * (h - i), 2 * (h - i) + 1, 2 * (h - i) + 2})
      if (!std::binary_search(bricks[bb[0]].begin(), bricks[bb[0]].end(), vid(x, 1)))
        throw std::logic_error("escher_wall: bottom endpoint is not in the intended brick");
    // odd cycle with the wall: a direct edge between equal colours, else one midpoint
    std::vector<int> r{top};
    if ((*col)[top] != (*col)[bottom]) {
      int mid = w.g.add_vertex();
      w.coord.push_back({0, 0});
      w.g.add_edge(top, mid);
      r.push_back(mid);
    }
    w.g.add_edge(r.back(), bottom);
    r.push_back(bottom);
    w.linking.push_back(r);
  }
  return w;
}

Graph random_graph(Rng& rng, int n, int edge_num, int edge_den) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(edge_num, edge_den)) g.add_edge(u, v);
  return g;
}

Graph random_connected_graph(Rng& rng, int n, int extra_edges) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng.range(0, v - 1)), v);
  const int max_edges = n * (n - 1) / 2;
  for (int k = 0; k < extra_edges && g.m() < max_edges;) {
    int u = static_cast<int>(rng.range(0, n - 1)), v = static_cast<int>(rng.range(0, n - 1));
    if (u == v || g.adjacent(u, v)) continue;
    g.add_edge(u, v);
    ++k;
  }
  return g;
}

Graph random_graph_ocp_at_most(Rng& rng, int n, int edge_num, int edge_den, int k) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Graph g = random_graph(rng, n, edge_num, edge_den);
    if (ocp_brute(g) <= k) return g;
  }
  throw CapExceeded("random_graph_ocp_at_most: no graph found");
}

StableSetInstance random_cost_instance(Rng& rng, int n, int edge_num, int edge_den, int max_cost) {
  Graph g = random_graph(rng, n, edge_num, edge_den);
  RVec c;
  for (int e = 0; e < g.m(); ++e) c.emplace_back(rng.range(0, max_cost));
  return StableSetInstance::from_costs(std::move(g), std::move(c));
}

namespace {

struct Box {
  std::vector<std::int64_t> lo, hi;
};

Box random_box(Rng& rng, int n, std::int64_t volume) {
  int width = static_cast<int>(std::floor(std::pow(static_cast<double>(volume), 1.0 / n)));
  width = std::clamp(width, 2, 12);
  Box b;
  for (int j = 0; j < n; ++j) {
    std::int64_t w = rng.range(1, width - 1);
    std::int64_t lo = rng.range(-w, 0);
    b.lo.push_back(lo);
    b.hi.push_back(lo + w);
  }
  return b;
}

std::int64_t coefficient(Rng& rng, std::int64_t delta) {
  std::int64_t a = (delta >= 2 && rng.chance(1, 6)) ? 2 : 1;
  return rng.chance(1, 2) ? a : -a;
}

IPInstance finish_ip(Rng& rng, const std::vector<IVec>& rows, const Box& box) {
  const std::size_t n = box.lo.size();
  IPInstance ip;
  ip.A = RationalMatrix::from_int_rows(rows, n);
  // right-hand sides from a random box point, loosened or (rarely) tightened
  std::vector<std::int64_t> x0(n);
  for (std::size_t j = 0; j < n; ++j) x0[j] = rng.range(box.lo[j], box.hi[j]);
  for (const auto& r : rows) {
    Integer s = 0;
    for (std::size_t j = 0; j < n; ++j) s += r[j] * x0[j];
    s += rng.chance(1, 8) ? -rng.range(1, 2) : rng.range(0, 2);
    ip.b.emplace_back(s);
  }
  for (std::size_t j = 0; j < n; ++j) {
    ip.w.emplace_back(rng.range(-3, 3));
    ip.lower.emplace_back(Rational(box.lo[j]));
    ip.upper.emplace_back(Rational(box.hi[j]));
  }
  return ip;
}

}  // namespace

IPInstance random_two_per_row_ip(std::uint64_t seed, const IPGenOptions& opt) {
  if (opt.n < 1 || opt.m < 1 || opt.delta_target < 1) throw PreconditionError("random_two_per_row_ip: bad options");
  Rng rng(seed);
  const int odd_budget = static_cast<int>(floor_log2(opt.delta_target));
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const int n = opt.n;
    const int m = static_cast<int>(rng.range(1, opt.m));
    Graph src = odd_budget >= 1 && n <= 40 ? random_graph_ocp_at_most(rng, n, 1, 3, odd_budget)
                                           : random_graph(rng, n, 1, 3);
    if (odd_budget == 0 && !is_bipartite(src)) continue;
    std::vector<IVec> rows;
    for (const auto& [u, v] : src.edges()) {
      if (static_cast<int>(rows.size()) >= m) break;
      IVec r(n, 0);
      r[u] = coefficient(rng, opt.delta_target);
      r[v] = coefficient(rng, opt.delta_target);
      rows.push_back(r);
    }
    while (static_cast<int>(rows.size()) < m) {
      IVec r(n, 0);
      r[rng.range(0, n - 1)] = coefficient(rng, opt.delta_target);
      rows.push_back(r);
    }
    // interleave edge and bound rows
    for (std::size_t i = rows.size(); i > 1; --i) std::swap(rows[i - 1], rows[rng.range(0, static_cast<std::int64_t>(i) - 1)]);
    auto a = RationalMatrix::from_int_rows(rows, n);
    if (!subdeterminants_within(a, opt.delta_target, std::min<std::size_t>(n, m))) continue;
    return finish_ip(rng, rows, random_box(rng, n, opt.box_volume));
  }
  throw CapExceeded("random_two_per_row_ip: certification attempts exhausted");
}

IPInstance random_two_per_column_ip(std::uint64_t seed, const IPGenOptions& opt) {
  if (opt.n < 1 || opt.m < 1 || opt.delta_target < 1) throw PreconditionError("random_two_per_column_ip: bad options");
  Rng rng(seed);
  for (int attempt = 0; attempt < opt.max_attempts; ++attempt) {
    const int n = opt.n;
    const int m = static_cast<int>(rng.range(1, opt.m));
    std::vector<IVec> rows(m, IVec(n, 0));
    for (int j = 0; j < n; ++j) {
      int r1 = static_cast<int>(rng.range(0, m - 1));
      rows[r1][j] = coefficient(rng, opt.delta_target);
      if (m > 1 && rng.chance(2, 3)) {
        int r2 = static_cast<int>(rng.range(0, m - 2));
        if (r2 >= r1) ++r2;
        rows[r2][j] = coefficient(rng, opt.delta_target);
      }
    }
    auto a = RationalMatrix::from_int_rows(rows, n);
    if (!subdeterminants_within(a, opt.delta_target, std::min<std::size_t>(n, m))) continue;
    return finish_ip(rng, rows, random_box(rng, n, opt.box_volume));
  }
  throw CapExceeded("random_two_per_column_ip: certification attempts exhausted");
}

GadgetInstance random_gadget_instance(Rng& rng, int g_vertices, int w_interior, int boundary, int max_cost) {
  if (boundary < 0 || boundary > 3 || boundary > g_vertices || w_interior < 1)
    throw PreconditionError("random_gadget_instance: bad sizes");
  GadgetInstance inst;
  inst.n = g_vertices + w_interior;
  for (int v = 0; v < g_vertices; ++v) inst.g_vertices.push_back(v);
  Graph g = random_graph(rng, g_vertices, 1, 2);
  for (const auto& e : g.edges()) {
    inst.g_edges.push_back(e);
    inst.g_cost.emplace_back(rng.range(0, max_cost));
  }
  std::vector<int> omega;
  while (static_cast<int>(omega.size()) < boundary) {
    int v = static_cast<int>(rng.range(0, g_vertices - 1));
    if (std::find(omega.begin(), omega.end(), v) == omega.end()) omega.push_back(v);
  }
  // W: random bipartite graph on interior + boundary vertices, connected
  std::vector<int> wv;
  for (int k = 0; k < w_interior; ++k) wv.push_back(g_vertices + k);
  wv.insert(wv.end(), omega.begin(), omega.end());
  std::vector<int> side(inst.n, 0);
  for (int v : wv) side[v] = static_cast<int>(rng.range(0, 1));
  Graph w(inst.n);
  auto try_add = [&](int a, int b) {
    if (a == b || side[a] == side[b] || w.adjacent(a, b) || g.adjacent(a, b)) return false;
    w.add_edge(a, b);
    inst.w_edges.push_back({std::min(a, b), std::max(a, b)});
    inst.w_cost.emplace_back(rng.range(0, max_cost));
    return true;
  };
  // spanning tree first: flip sides where needed so that it stays bipartite
  for (std::size_t k = 1; k < wv.size(); ++k) {
    int a = wv[rng.range(0, static_cast<std::int64_t>(k) - 1)], b = wv[k];
    if (g.adjacent(a, b) || a == b) {
      // pick an interior partner, never adjacent in G
      a = wv[rng.range(0, std::min<std::int64_t>(k, w_interior) - 1)];
    }
    side[b] = 1 - side[a];
    try_add(a, b);
  }
  for (std::size_t i = 0; i < wv.size(); ++i)
    for (std::size_t j = i + 1; j < wv.size(); ++j)
      if (rng.chance(1, 4)) try_add(wv[i], wv[j]);
  return inst;
}

EmbeddedGraph k4_projective_fixture() {
  EmbeddedGraph eg;
  eg.g = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  eg.rotation = {{0, 2, 1}, {0, 3, 4}, {1, 5, 3}, {2, 4, 5}};
  eg.signature.assign(6, -1);
  auto ft = trace_faces(eg);
  if (ft.faces.size() != 3 || ft.euler_genus != 1) throw std::logic_error("k4_projective_fixture: bad embedding");
  return eg;
}

EmbeddedGraph random_embedded_fixture(Rng& rng, int n, int m, int min_genus, int max_genus) {
  if (n < 3 || m < n || m > n * (n - 1) / 2) throw PreconditionError("random_embedded_fixture: bad sizes");
  // acceptance is rare (faces must be cycles) but each attempt is cheap
  for (int attempt = 0; attempt < 2000000; ++attempt) {
    Graph g = random_connected_graph(rng, n, m - (n - 1));
    if (is_bipartite(g) || !is_two_connected(g)) continue;
    std::vector<int> lambda(n);
    for (auto& l : lambda) l = static_cast<int>(rng.range(0, 1));
    EmbeddedGraph eg;
    eg.g = g;
    for (const auto& [u, v] : g.edges()) eg.signature.push_back(lambda[u] == lambda[v] ? -1 : 1);
    eg.rotation.assign(n, {});
    for (int v = 0; v < n; ++v) {
      for (const auto& inc : g.adj(v)) eg.rotation[v].push_back(inc.edge);
      auto& r = eg.rotation[v];
      for (std::size_t i = r.size(); i > 1; --i) std::swap(r[i - 1], r[rng.range(0, static_cast<std::int64_t>(i) - 1)]);
    }
    auto ft = trace_faces(eg);
    if (ft.euler_genus < min_genus || ft.euler_genus > max_genus) continue;
    bool cycles = true;
    for (const auto& f : ft.faces) {
      auto vs = f.vertices;
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) cycles = false;
    }
    if (!cycles) continue;
    try {
      alternating_orientation(eg);
    } catch (const PreconditionError&) {
      continue;
    }
    return eg;
  }
  throw CapExceeded("random_embedded_fixture: no embedding found");
}

}  // namespace tdm
