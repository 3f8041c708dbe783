#include "tdm/slack.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tdm {

SlackVec slack_of(const Graph& g, const std::vector<std::int64_t>& x) {
  SlackVec y(g.m());
  for (int e = 0; e < g.m(); ++e) y[e] = 1 - x[g.edge(e).first] - x[g.edge(e).second];
  return y;
}

std::int64_t omega_walk(const Graph& g, const std::vector<int>& walk, const SlackVec& y) {
  std::int64_t s = 0;
  auto es = edge_walk(g, walk);
  for (std::size_t i = 0; i < es.size(); ++i) s += (i % 2 == 0) ? y[es[i]] : -y[es[i]];
  return s;
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edges, std::vector<int>* map) {
  std::vector<int> vs;
  for (int e : edges) {
    vs.push_back(g.edge(e).first);
    vs.push_back(g.edge(e).second);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  auto idx = [&](int v) { return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  Graph h(static_cast<int>(vs.size()));
  for (int e : edges) h.add_edge(idx(g.edge(e).first), idx(g.edge(e).second));
  if (map) *map = vs;
  return h;
}

namespace {

// BFS forest; parent[root] = -1.
struct Forest {
  std::vector<int> parent, root, sign;
  std::vector<std::int64_t> k;  // x_v = sign_v * a_root + k_v
};

std::vector<int> path_to_root(const Forest& f, int v) {
  std::vector<int> p;
  for (int u = v; u != -1; u = f.parent[u]) p.push_back(u);
  std::reverse(p.begin(), p.end());
  return p;
}

// root .. u, v .. root
std::vector<int> closing_walk(const Forest& f, int u, int v) {
  auto w = path_to_root(f, u);
  auto pv = path_to_root(f, v);
  w.insert(w.end(), pv.rbegin(), pv.rend());
  return w;
}

}  // namespace

Membership membership_Y(const Graph& g, const SlackVec& y) {
  if (static_cast<int>(y.size()) != g.m()) throw std::invalid_argument("slack vector size mismatch");
  Membership res;
  for (int e = 0; e < g.m(); ++e)
    if (y[e] < 0) {
      res.reason = "negative entry on edge " + std::to_string(e);
      return res;
    }
  const int n = g.n();
  Forest f{std::vector<int>(n, -2), std::vector<int>(n, -1), std::vector<int>(n, 0), std::vector<std::int64_t>(n, 0)};
  for (int s = 0; s < n; ++s) {
    if (f.parent[s] != -2) continue;
    f.parent[s] = -1;
    f.root[s] = s;
    f.sign[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const auto& inc : g.adj(v)) {
        int u = inc.nbr;
        if (f.parent[u] != -2) continue;
        f.parent[u] = v;
        f.root[u] = s;
        f.sign[u] = -f.sign[v];
        f.k[u] = 1 - f.k[v] - y[inc.edge];
        q.push(u);
      }
    }
  }
  std::vector<std::optional<std::int64_t>> pin(n);
  std::vector<int> pin_edge(n, -1);
  for (int e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edge(e);
    const int r = f.root[u];
    if (f.sign[u] != f.sign[v]) {
      if (f.k[u] + f.k[v] != 1 - y[e]) {
        res.walk = closing_walk(f, u, v);
        res.reason = "even closed walk with nonzero alternating sum";
        return res;
      }
      continue;
    }
    std::int64_t rhs = 1 - y[e] - f.k[u] - f.k[v];
    if (rhs % 2 != 0) {
      res.walk = closing_walk(f, u, v);
      res.reason = "odd closed walk with even alternating sum";
      return res;
    }
    std::int64_t a = f.sign[u] * (rhs / 2);
    if (!pin[r]) {
      pin[r] = a;
      pin_edge[r] = e;
    } else if (*pin[r] != a) {
      auto [pu, pv] = g.edge(pin_edge[r]);
      res.walk = closing_walk(f, pu, pv);
      auto w2 = closing_walk(f, u, v);
      res.walk.insert(res.walk.end(), w2.begin() + 1, w2.end());
      res.reason = "two odd closed walks disagree";
      return res;
    }
  }
  res.member = true;
  res.x.resize(n);
  for (int v = 0; v < n; ++v) res.x[v] = f.sign[v] * pin[f.root[v]].value_or(0) + f.k[v];
  return res;
}

std::vector<std::int64_t> recover_x(const Graph& g, const SlackVec& y) {
  if (static_cast<int>(y.size()) != g.m()) throw std::invalid_argument("slack vector size mismatch");
  if (g.n() == 0 || !is_connected(g)) throw PreconditionError("recover_x: graph must be connected");
  auto walk = odd_closed_walk_through(g, 0);
  if (walk.empty()) throw PreconditionError("recover_x: graph is bipartite, x is not unique");
  std::int64_t om = omega_walk(g, walk, y);
  if ((1 - om) % 2 != 0) throw PreconditionError("recover_x: y is not a slack vector");
  std::vector<std::int64_t> x(g.n(), 0);
  std::vector<char> seen(g.n(), 0);
  x[0] = (1 - om) / 2;
  seen[0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (const auto& inc : g.adj(v))
      if (!seen[inc.nbr]) {
        seen[inc.nbr] = 1;
        x[inc.nbr] = 1 - x[v] - y[inc.edge];
        q.push(inc.nbr);
      }
  }
  if (slack_of(g, x) != y) throw PreconditionError("recover_x: y is not a slack vector");
  return x;
}

Rounding round_slack_vector(const Graph& g, const RVec& c, const SlackVec& y) {
  if (static_cast<int>(c.size()) != g.m()) throw std::invalid_argument("cost vector size mismatch");
  auto mem = membership_Y(g, y);
  if (!mem.member) throw PreconditionError("round_slack_vector: y is not a slack vector");
  Rounding res;
  res.cost_y = 0;
  for (int e = 0; e < g.m(); ++e) res.cost_y += c[e] * y[e];

  const int n = g.n();
  std::vector<std::int64_t> x(n, 0);
  int ncomp = 0;
  auto comp = components(g, &ncomp);
  for (int k = 0; k < ncomp; ++k) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (comp[v] == k) vs.push_back(v);
    Graph h = induced(g, vs);
    if (auto col = bipartition(h)) {
      for (std::size_t i = 0; i < vs.size(); ++i) x[vs[i]] = (*col)[i] == 0 ? 1 : 0;
      continue;
    }
    SlackVec yh(h.m());
    for (int e = 0; e < h.m(); ++e) yh[e] = y[*g.edge_between(vs[h.edge(e).first], vs[h.edge(e).second])];
    auto xh = recover_x(h, yh);
    for (std::size_t i = 0; i < vs.size(); ++i) x[vs[i]] = xh[i];
  }

  auto is01 = [](std::int64_t v) { return v == 0 || v == 1; };
  while (true) {
    int v0 = -1;
    for (int v = 0; v < n; ++v)
      if (!is01(x[v])) {
        v0 = v;
        break;
      }
    if (v0 < 0) break;
    if (++res.iterations > 1000000) throw std::logic_error("round_slack_vector: no progress");
    SlackVec cur = slack_of(g, x);

    // component of the tight-edge graph through v0, 2-coloured
    std::vector<int> col(n, -1);
    std::vector<int> hv{v0};
    col[v0] = 0;
    for (std::size_t i = 0; i < hv.size(); ++i)
      for (const auto& inc : g.adj(hv[i]))
        if (cur[inc.edge] == 0 && col[inc.nbr] == -1) {
          col[inc.nbr] = 1 - col[hv[i]];
          hv.push_back(inc.nbr);
        }
    const int a_col = x[v0] >= 2 ? 0 : 1;
    const std::int64_t alpha = x[v0] >= 2 ? x[v0] : 1 - x[v0];
    auto in_a = [&](int v) { return col[v] == a_col; };
    auto in_b = [&](int v) { return col[v] == 1 - a_col; };

    Rational slope = 0;  // cost change per unit of shifting A up
    std::int64_t t_up = -1, t_down = alpha - 1;
    for (int e = 0; e < g.m(); ++e) {
      auto [p, q] = g.edge(e);
      const bool pa = in_a(p), qa = in_a(q), pb = in_b(p), qb = in_b(q);
      if ((pa && qb) || (pb && qa)) continue;
      if (pa && qa) throw std::logic_error("round_slack_vector: negative slack inside A");
      if (pb && qb) {
        slope += 2 * c[e];
        t_down = std::min(t_down, cur[e] / 2);
      } else if (pa || qa) {
        slope -= c[e];
        t_up = t_up < 0 ? cur[e] : std::min(t_up, cur[e]);
      } else if (pb || qb) {
        slope += c[e];
        t_down = std::min(t_down, cur[e]);
      }
    }
    const bool up = slope < 0;
    const std::int64_t t = up ? t_up : t_down;
    if (t <= 0) throw std::logic_error("round_slack_vector: zero step");
    for (int v : hv) x[v] += (in_a(v) == up) ? t : -t;
  }

  SlackVec fin = slack_of(g, x);
  res.cost_f = 0;
  for (int v = 0; v < n; ++v)
    if (x[v] == 1) res.set.push_back(v);
  for (int e = 0; e < g.m(); ++e) {
    if (fin[e] != 0 && fin[e] != 1) throw std::logic_error("round_slack_vector: non 0/1 slack at the end");
    if (fin[e] == 1) {
      res.slack_set.push_back(e);
      res.cost_f += c[e];
    }
  }
  return res;
}

Composition compose_slack(const Graph& g, const std::vector<std::vector<int>>& parts,
                          const std::vector<SlackVec>& part_y) {
  if (parts.empty() || parts.size() != part_y.size()) throw std::invalid_argument("compose_slack: parts mismatch");
  if (!is_connected(g)) throw PreconditionError("compose_slack: G must be connected");
  Composition res;
  std::vector<std::optional<std::int64_t>> y(g.m());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].size() != part_y[i].size()) throw std::invalid_argument("compose_slack: part vector size mismatch");
    for (std::size_t k = 0; k < parts[i].size(); ++k) {
      int e = parts[i][k];
      if (y[e] && *y[e] != part_y[i][k]) throw PreconditionError("compose_slack: parts disagree on a shared edge");
      y[e] = part_y[i][k];
    }
  }
  res.y.resize(g.m());
  for (int e = 0; e < g.m(); ++e) {
    if (!y[e]) throw PreconditionError("compose_slack: parts do not cover G");
    res.y[e] = *y[e];
  }

  std::vector<int> map0;
  edge_subgraph(g, parts[0], &map0);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::vector<int> map;
    Graph gi = edge_subgraph(g, parts[i], &map);
    if (!is_connected(gi)) throw PreconditionError("compose_slack: every part must be connected");
    if (i > 0) {
      if (!is_bipartite(gi)) throw PreconditionError("compose_slack: parts other than G_0 must be bipartite");
      std::vector<int> common;
      std::set_intersection(map0.begin(), map0.end(), map.begin(), map.end(), std::back_inserter(common));
      Graph ov(static_cast<int>(common.size()));
      auto pos = [&](int v) { return static_cast<int>(std::lower_bound(common.begin(), common.end(), v) - common.begin()); };
      for (int e : parts[i])
        if (std::find(parts[0].begin(), parts[0].end(), e) != parts[0].end()) ov.add_edge(pos(g.edge(e).first), pos(g.edge(e).second));
      if (common.empty() || !is_connected(ov)) throw PreconditionError("compose_slack: overlap with G_0 must be connected");
    }
    SlackVec yi(parts[i].size());
    for (std::size_t k = 0; k < parts[i].size(); ++k) yi[k] = res.y[parts[i][k]];
    res.part_member.push_back(membership_Y(gi, yi).member);
  }
  res.member = std::all_of(res.part_member.begin(), res.part_member.end(), [](bool b) { return b; });
  auto whole = membership_Y(g, res.y);
  if (whole.member != res.member) throw std::logic_error("compose_slack: part verdicts disagree with G");
  res.x = whole.x;
  res.walk = whole.walk;
  return res;
}

}  // namespace tdm
