#include "tdm/surface.hpp"

#include "tdm/errors.hpp"
#include "tdm/matrix.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace tdm {

void EmbeddedGraph::validate() const {
  if (static_cast<int>(rotation.size()) != g.n()) throw InputError("embedding: one rotation per vertex expected");
  if (static_cast<int>(signature.size()) != g.m()) throw InputError("embedding: one signature per edge expected");
  for (int s : signature)
    if (s != 1 && s != -1) throw InputError("embedding: signatures must be +1 or -1");
  std::vector<int> seen(g.m(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (static_cast<int>(rotation[v].size()) != g.degree(v))
      throw InputError("embedding: rotation of vertex " + std::to_string(v) + " does not list its edges");
    for (int e : rotation[v]) {
      if (e < 0 || e >= g.m()) throw InputError("embedding: edge id out of range");
      const auto& [a, b] = g.edge(e);
      if (a != v && b != v) throw InputError("embedding: edge " + std::to_string(e) + " not incident to its vertex");
      ++seen[e];
    }
  }
  for (int e = 0; e < g.m(); ++e)
    if (seen[e] != 2) throw InputError("embedding: edge " + std::to_string(e) + " must appear in exactly two rotations");
}

namespace {

int rot_index(const EmbeddedGraph& eg, int v, int e) {
  const auto& r = eg.rotation[v];
  return static_cast<int>(std::find(r.begin(), r.end(), e) - r.begin());
}

// lambda with lambda_u ^ lambda_v == bit(e) for all edges, if one exists
bool has_potential(const Graph& g, const std::vector<int>& bit) {
  std::vector<int> lab(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (lab[s] >= 0) continue;
    lab[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.adj(v)) {
        int want = lab[v] ^ bit[inc.edge];
        if (lab[inc.nbr] < 0) {
          lab[inc.nbr] = want;
          q.push(inc.nbr);
        } else if (lab[inc.nbr] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

FaceTrace trace_faces(const EmbeddedGraph& eg) {
  eg.validate();
  const Graph& g = eg.g;
  if (!is_connected(g)) throw PreconditionError("trace_faces: graph must be connected");
  FaceTrace ft;
  // state (v, i, s): leave v along rotation[v][i] with local orientation s
  auto key = [&](int v, int i, int s) { return std::make_tuple(v, i, s); };
  std::map<std::tuple<int, int, int>, bool> used;
  for (int v0 = 0; v0 < g.n(); ++v0)
    for (int i0 = 0; i0 < g.degree(v0); ++i0)
      for (int s0 : {1, -1}) {
        if (used.count(key(v0, i0, s0))) continue;
        Face f;
        int v = v0, i = i0, s = s0;
        do {
          int e = eg.rotation[v][i];
          int w = g.other(e, v);
          int s2 = s * eg.signature[e];
          int j = rot_index(eg, w, e);
          used[key(v, i, s)] = true;
          used[key(w, j, -s2)] = true;
          f.vertices.push_back(v);
          f.edges.push_back(e);
          int d = g.degree(w);
          v = w;
          i = ((j + s2) % d + d) % d;
          s = s2;
        } while (!(v == v0 && i == i0 && s == s0));
        ft.faces.push_back(std::move(f));
      }
  ft.euler_genus = 2 - g.n() + g.m() - static_cast<int>(ft.faces.size());
  std::vector<int> neg(g.m());
  for (int e = 0; e < g.m(); ++e) neg[e] = eg.signature[e] < 0;
  ft.orientable = has_potential(g, neg);
  return ft;
}

bool odd_cycles_one_sided(const EmbeddedGraph& eg) {
  std::vector<int> bit(eg.g.m());
  for (int e = 0; e < eg.g.m(); ++e) bit[e] = eg.signature[e] < 0 ? 0 : 1;
  return has_potential(eg.g, bit);
}

std::vector<int> DualOrientation::pattern(int f) const {
  std::vector<int> p(faces[f].length(), 0);
  for (std::size_t e = 0; e < tail.size(); ++e) {
    if (tail[e] == f) p[tail_pos[e]] = 1;
    if (head[e] == f) p[head_pos[e]] = -1;
  }
  return p;
}

bool DualOrientation::is_circulation(const SlackVec& y) const {
  if (y.size() != tail.size()) throw std::invalid_argument("is_circulation: one value per arc expected");
  std::vector<std::int64_t> net(nodes(), 0);
  for (std::size_t e = 0; e < y.size(); ++e) {
    net[tail[e]] += y[e];
    net[head[e]] -= y[e];
  }
  return std::all_of(net.begin(), net.end(), [](std::int64_t x) { return x == 0; });
}

DualOrientation alternating_orientation(const EmbeddedGraph& eg) {
  auto ft = trace_faces(eg);
  const int m = eg.g.m();
  const int nf = static_cast<int>(ft.faces.size());
  for (const auto& f : ft.faces)
    if (f.length() % 2 != 0) throw PreconditionError("alternating_orientation: odd face");
  std::vector<std::vector<std::pair<int, int>>> occ(m);  // (face, position)
  for (int f = 0; f < nf; ++f)
    for (std::size_t i = 0; i < ft.faces[f].length(); ++i) occ[ft.faces[f].edges[i]].push_back({f, static_cast<int>(i)});
  // position i of face f leaves f iff (i + phase[f]) is even
  std::vector<int> phase(nf, -1);
  std::vector<std::vector<std::pair<int, int>>> link(nf);  // (other face, required xor)
  for (int e = 0; e < m; ++e) {
    auto [f, i] = occ[e][0];
    auto [h, j] = occ[e][1];
    int need = 1 ^ ((i + j) & 1);
    link[f].push_back({h, need});
    link[h].push_back({f, need});
  }
  for (int s = 0; s < nf; ++s) {
    if (phase[s] >= 0) continue;
    phase[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (auto [h, need] : link[f]) {
        int want = phase[f] ^ need;
        if (phase[h] < 0) {
          phase[h] = want;
          q.push(h);
        } else if (phase[h] != want) {
          throw PreconditionError("alternating_orientation: no alternating orientation exists");
        }
      }
    }
  }
  DualOrientation d;
  d.faces = ft.faces;
  d.tail.resize(m);
  d.head.resize(m);
  d.tail_pos.resize(m);
  d.head_pos.resize(m);
  for (int e = 0; e < m; ++e) {
    auto a = occ[e][0], b = occ[e][1];
    if ((a.second + phase[a.first]) % 2 != 0) std::swap(a, b);
    d.tail[e] = a.first;
    d.tail_pos[e] = a.second;
    d.head[e] = b.first;
    d.head_pos[e] = b.second;
  }
  return d;
}

bool is_alternating(const DualOrientation& d) {
  for (int f = 0; f < static_cast<int>(d.nodes()); ++f) {
    auto p = d.pattern(f);
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p[i] == 0 || p[i] == p[(i + 1) % p.size()]) return false;
  }
  return true;
}

namespace {

std::vector<int> shortest_odd_cycle(const Graph& g) {
  std::vector<int> best;
  for (int s = 0; s < g.n(); ++s) {
    auto w = odd_closed_walk_through(g, s);
    if (w.empty()) continue;
    if (best.empty() || w.size() < best.size()) best = w;
  }
  return best;
}

// Closed walk (v0, ..., vk = v0) rotated to start at vertex v.
std::vector<int> rotate_to(const std::vector<int>& walk, int v) {
  std::vector<int> body(walk.begin(), walk.end() - 1);
  auto it = std::find(body.begin(), body.end(), v);
  std::rotate(body.begin(), it, body.end());
  body.push_back(v);
  return body;
}

RVec walk_functional(const Graph& g, const std::vector<int>& walk) {
  RVec r(g.m(), 0);
  auto es = edge_walk(g, walk);
  for (std::size_t i = 0; i < es.size(); ++i) r[es[i]] += (i % 2 == 0) ? 1 : -1;
  return r;
}

}  // namespace

HomologyBasis homology_basis(const EmbeddedGraph& eg) {
  const Graph& g = eg.g;
  auto ft = trace_faces(eg);
  if (is_bipartite(g)) throw PreconditionError("homology_basis: graph must be non-bipartite");
  if (!is_two_connected(g)) throw PreconditionError("homology_basis: graph must be 2-connected");
  if (!odd_cycles_one_sided(eg)) throw PreconditionError("homology_basis: some odd cycle is 2-sided");

  HomologyBasis hb;
  hb.euler_genus = ft.euler_genus;
  hb.odd_cycle = shortest_odd_cycle(g);

  // primal BFS tree
  std::vector<char> in_tree(g.m(), 0);
  std::vector<int> parent(g.n(), -1), pedge(g.n(), -1), depth(g.n(), 0);
  {
    std::vector<char> seen(g.n(), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.adj(v))
        if (!seen[inc.nbr]) {
          seen[inc.nbr] = 1;
          parent[inc.nbr] = v;
          pedge[inc.nbr] = inc.edge;
          depth[inc.nbr] = depth[v] + 1;
          in_tree[inc.edge] = 1;
          q.push(inc.nbr);
        }
    }
  }
  // dual BFS tree over the remaining edges
  const int nf = static_cast<int>(ft.faces.size());
  std::vector<std::vector<int>> faces_of(g.m());
  for (int f = 0; f < nf; ++f)
    for (int e : ft.faces[f].edges) faces_of[e].push_back(f);
  std::vector<char> in_cotree(g.m(), 0);
  {
    std::vector<char> seen(nf, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (int e : ft.faces[f].edges) {
        if (in_tree[e] || in_cotree[e]) continue;
        int h = faces_of[e][0] == f ? faces_of[e][1] : faces_of[e][0];
        if (seen[h]) continue;
        seen[h] = 1;
        in_cotree[e] = 1;
        q.push(h);
      }
    }
  }

  auto tree_path = [&](int u, int v) {
    std::vector<int> a{u}, b{v};
    while (u != v) {
      if (depth[u] >= depth[v]) {
        u = parent[u];
        a.push_back(u);
      } else {
        v = parent[v];
        b.push_back(v);
      }
    }
    b.pop_back();
    a.insert(a.end(), b.rbegin(), b.rend());
    return a;  // u ... v
  };

  std::vector<RVec> rows;
  for (const auto& f : ft.faces) {
    auto w = f.vertices;
    w.push_back(w.front());
    rows.push_back(walk_functional(g, w));
  }
  std::size_t r0 = rank(RationalMatrix::from_rows(rows, g.m()));

  const auto& c = hb.odd_cycle;
  for (int e = 0; e < g.m(); ++e) {
    if (in_tree[e] || in_cotree[e]) continue;
    auto [u, v] = g.edge(e);
    auto cyc = tree_path(v, u);  // v ... u, closed by e
    cyc.insert(cyc.begin(), u);  // u v ... u
    std::vector<int> walk;
    if ((cyc.size() - 1) % 2 == 0) {
      walk = cyc;
    } else {
      // join with the odd cycle through a shortest connecting path
      std::vector<int> best;
      for (std::size_t i = 0; i + 1 < cyc.size(); ++i)
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
          auto p = shortest_path(g, cyc[i], c[k]);
          if (best.empty() || p.size() < best.size()) best = p;
        }
      auto d = rotate_to(cyc, best.front());
      auto cc = rotate_to(c, best.back());
      walk = d;
      walk.insert(walk.end(), best.begin() + 1, best.end());
      walk.insert(walk.end(), cc.begin() + 1, cc.end());
      walk.insert(walk.end(), best.rbegin() + 1, best.rend());
    }
    std::vector<int> mult(g.m(), 0);
    for (int x : edge_walk(g, walk))
      if (++mult[x] > 2) throw std::logic_error("homology_basis: walk uses an edge more than twice");
    rows.push_back(walk_functional(g, walk));
    std::size_t r = rank(RationalMatrix::from_rows(rows, g.m()));
    if (r > r0) {
      r0 = r;
      hb.even_walks.push_back(walk);
    } else {
      rows.pop_back();
    }
  }
  return hb;
}

HomologyClass omega(const Graph& g, const SlackVec& y, const HomologyBasis& basis) {
  if (static_cast<int>(y.size()) != g.m()) throw std::invalid_argument("omega: one value per edge expected");
  HomologyClass h;
  std::int64_t oc = omega_walk(g, basis.odd_cycle, y);
  h.parity = static_cast<int>(((oc % 2) + 2) % 2);
  for (const auto& w : basis.even_walks) h.coords.push_back(omega_walk(g, w, y));
  return h;
}

DualReport verify_dual_representation(const EmbeddedGraph& eg, std::size_t edge_cap) {
  const Graph& g = eg.g;
  if (static_cast<std::size_t>(g.m()) > edge_cap) throw CapExceeded("verify_dual_representation: too many edges");
  auto d = alternating_orientation(eg);
  auto hb = homology_basis(eg);
  DualReport rep;
  rep.euler_genus = hb.euler_genus;
  rep.basis_walks = hb.even_walks.size();
  HomologyClass target{1, std::vector<std::int64_t>(hb.even_walks.size(), 0)};
  const std::uint64_t total = std::uint64_t{1} << g.m();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    SlackVec y(g.m());
    for (int e = 0; e < g.m(); ++e) y[e] = (bits >> e) & 1;
    if (membership_Y(g, y).member) rep.slack_vectors.push_back(y);
    if (d.is_circulation(y) && omega(g, y, hb) == target) rep.circulations.push_back(y);
  }
  rep.equal = rep.slack_vectors == rep.circulations;
  return rep;
}

bool matching_is_crossfree(const std::vector<std::pair<int, int>>& pairs, int len) {
  auto between = [len](int x, int from, int to) {
    int dx = ((x - from) % len + len) % len;
    int dt = ((to - from) % len + len) % len;
    return dx > 0 && dx < dt;
  };
  for (const auto& [a1, b1] : pairs)
    for (const auto& [a2, b2] : pairs) {
      if (a1 == a2 && b1 == b2) continue;
      if (between(a2, a1, b1) && between(b2, b1, a1)) return false;
    }
  return true;
}

CrossFree crossfree_decompose(const DualOrientation& d, const SlackVec& y) {
  const std::size_t m = d.tail.size();
  if (y.size() != m) throw std::invalid_argument("crossfree_decompose: one value per arc expected");
  for (auto v : y)
    if (v != 0 && v != 1) throw PreconditionError("crossfree_decompose: y must be 0/1");
  if (!d.is_circulation(y)) throw PreconditionError("crossfree_decompose: y is not a circulation");
  const int nf = static_cast<int>(d.nodes());
  CrossFree cf;
  cf.matching.resize(nf);
  // next_arc[e] = arc leaving head[e] that e is matched to
  std::vector<int> next_arc(m, -1);
  for (int f = 0; f < nf; ++f) {
    const auto& face = d.faces[f];
    auto pat = d.pattern(f);
    std::vector<int> live;  // support positions in cyclic order
    for (std::size_t i = 0; i < face.length(); ++i)
      if (y[face.edges[i]] == 1) live.push_back(static_cast<int>(i));
    while (!live.empty()) {
      std::size_t k = live.size(), i = 0;
      while (i < k && pat[live[i]] == pat[live[(i + 1) % k]]) ++i;
      if (i == k) throw std::logic_error("crossfree_decompose: unbalanced node");
      int p = live[i], q = live[(i + 1) % k];
      int in = pat[p] < 0 ? p : q, out = pat[p] < 0 ? q : p;
      cf.matching[f].push_back({in, out});
      next_arc[face.edges[in]] = face.edges[out];
      if ((i + 1) % k == 0) {
        live.erase(live.begin() + i);
        live.erase(live.begin());
      } else {
        live.erase(live.begin() + i, live.begin() + i + 2);
      }
    }
  }
  std::vector<char> done(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    if (y[e] != 1 || done[e]) continue;
    std::vector<int> cyc;
    int a = static_cast<int>(e);
    while (!done[a]) {
      done[a] = 1;
      cyc.push_back(a);
      a = next_arc[a];
    }
    cf.cycles.push_back(std::move(cyc));
  }
  return cf;
}

}  // namespace tdm
