#pragma once
// Independent reference computations for the unit and acceptance tests.
// Everything here is deliberately naive.

#include <tdm/graph.hpp>
#include <tdm/ip.hpp>
#include <tdm/rational.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace ref {

using tdm::Graph;
using tdm::Rational;

// Laplace expansion along the first row.
inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> r;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) r.push_back(m[i][k]);
      minor.push_back(r);
    }
    Rational t = m[0][j] * cofactor_det(minor);
    s += (j % 2 == 0) ? t : Rational(-t);
  }
  return s;
}

// max |det| over all square submatrices, by cofactor expansion.
inline Rational max_subdet(const std::vector<std::vector<Rational>>& a) {
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  Rational best = 0;
  for (std::uint32_t rs = 1; rs < (1u << m); ++rs)
    for (std::uint32_t cs = 1; cs < (1u << n); ++cs) {
      if (__builtin_popcount(rs) != __builtin_popcount(cs)) continue;
      std::vector<std::vector<Rational>> sub;
      for (std::size_t i = 0; i < m; ++i) {
        if (!((rs >> i) & 1)) continue;
        std::vector<Rational> r;
        for (std::size_t j = 0; j < n; ++j)
          if ((cs >> j) & 1) r.push_back(a[i][j]);
        sub.push_back(r);
      }
      Rational d = abs(cofactor_det(sub));
      if (d > best) best = d;
    }
  return best;
}

// All stable sets as bitmasks, by plain subset enumeration.
inline std::vector<std::uint32_t> stable_masks(const Graph& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << g.n()); ++s) {
    bool ok = true;
    for (const auto& [u, v] : g.edges())
      if (((s >> u) & 1) && ((s >> v) & 1)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

inline Rational mask_weight(std::uint32_t s, const std::vector<Rational>& w) {
  Rational t = 0;
  for (std::size_t v = 0; v < w.size(); ++v)
    if ((s >> v) & 1) t += w[v];
  return t;
}

// Cost of the edges with no endpoint in s.
inline Rational mask_slack_cost(const Graph& g, std::uint32_t s, const std::vector<Rational>& c) {
  Rational t = 0;
  for (int e = 0; e < g.m(); ++e)
    if (!((s >> g.edge(e).first) & 1) && !((s >> g.edge(e).second) & 1)) t += c[e];
  return t;
}

inline Rational max_weight(const Graph& g, const std::vector<Rational>& w) {
  Rational best = 0;
  for (auto s : stable_masks(g)) best = std::max(best, mask_weight(s, w));
  return best;
}

inline Rational min_slack_cost(const Graph& g, const std::vector<Rational>& c) {
  std::optional<Rational> best;
  for (auto s : stable_masks(g)) {
    Rational v = mask_slack_cost(g, s, c);
    if (!best || v < *best) best = v;
  }
  return *best;
}

// y in Y(G) iff some integer x in [-r, r]^n has y_uv = 1 - x_u - x_v.
inline bool in_Y_by_search(const Graph& g, const std::vector<std::int64_t>& y, int r) {
  const int n = g.n();
  std::vector<std::int64_t> x(n, -r);
  while (true) {
    bool ok = true;
    for (int e = 0; e < g.m() && ok; ++e) ok = y[e] == 1 - x[g.edge(e).first] - x[g.edge(e).second];
    if (ok) return true;
    int k = 0;
    while (k < n && x[k] == r) x[k++] = -r;
    if (k == n) return false;
    ++x[k];
  }
}

// Integer points of the bounded box of ip, odometer order.
inline void for_each_point(const tdm::IPInstance& ip, const std::function<void(const std::vector<tdm::Integer>&)>& f) {
  const std::size_t n = ip.n();
  std::vector<tdm::Integer> x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = tdm::num(*ip.lower[j]);
  while (true) {
    f(x);
    std::size_t k = 0;
    while (k < n && x[k] == tdm::num(*ip.upper[k])) {
      x[k] = tdm::num(*ip.lower[k]);
      ++k;
    }
    if (k == n) return;
    ++x[k];
  }
}

struct IPRef {
  bool feasible = false;
  Rational best;
  std::vector<std::vector<tdm::Integer>> optima;
};

inline IPRef ip_by_enumeration(const tdm::IPInstance& ip) {
  IPRef r;
  for_each_point(ip, [&](const std::vector<tdm::Integer>& x) {
    for (std::size_t i = 0; i < ip.m(); ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < ip.n(); ++j) s += ip.A(i, j) * Rational(x[j]);
      if (s > ip.b[i]) return;
    }
    Rational v = 0;
    for (std::size_t j = 0; j < ip.n(); ++j) v += ip.w[j] * Rational(x[j]);
    if (!r.feasible || v > r.best) {
      r.feasible = true;
      r.best = v;
      r.optima.clear();
    }
    if (v == r.best) r.optima.push_back(x);
  });
  return r;
}

// Odd cycle packing by trying all vertex subsets as unions of disjoint
// induced odd cycles.  Tiny graphs only.
inline int ocp_by_search(const Graph& g) {
  const int n = g.n();
  // odd cycles as vertex masks: a mask is an odd cycle if the induced
  // subgraph contains a Hamiltonian cycle of odd length.  Minimal ones
  // suffice, and an induced odd cycle exists inside any odd closed walk.
  std::vector<std::uint32_t> odd;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int k = __builtin_popcount(s);
    if (k < 3 || k % 2 == 0) continue;
    // induced 2-regular connected subgraph on s
    bool two_reg = true;
    for (int v = 0; v < n && two_reg; ++v) {
      if (!((s >> v) & 1)) continue;
      int d = 0;
      for (const auto& inc : g.adj(v)) d += (s >> inc.nbr) & 1;
      two_reg = d == 2;
    }
    if (!two_reg) continue;
    int start = __builtin_ctz(s);
    std::uint32_t seen = 1u << start;
    std::vector<int> st{start};
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (const auto& inc : g.adj(v))
        if (((s >> inc.nbr) & 1) && !((seen >> inc.nbr) & 1)) {
          seen |= 1u << inc.nbr;
          st.push_back(inc.nbr);
        }
    }
    if (seen == s) odd.push_back(s);
  }
  std::function<int(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t used) -> int {
    if (i == odd.size()) return 0;
    int best = rec(i + 1, used);
    if (!(odd[i] & used)) best = std::max(best, 1 + rec(i + 1, used | odd[i]));
    return best;
  };
  return rec(0, 0);
}

// Fixes x at the first vertex of every component and propagates along a
// spanning tree, trying each root value in [-r, r].
inline bool in_Y_by_propagation(const Graph& g, const std::vector<std::int64_t>& y, int r) {
  for (auto q : y)
    if (q < 0) return false;
  int nc = 0;
  auto comp = tdm::components(g, &nc);
  for (int k = 0; k < nc; ++k) {
    int root = static_cast<int>(std::find(comp.begin(), comp.end(), k) - comp.begin());
    bool any = false;
    for (int t = -r; t <= r && !any; ++t) {
      std::vector<std::optional<std::int64_t>> x(g.n());
      x[root] = t;
      std::vector<int> order{root};
      for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& inc : g.adj(order[i]))
          if (!x[inc.nbr]) {
            x[inc.nbr] = 1 - y[inc.edge] - *x[order[i]];
            order.push_back(inc.nbr);
          }
      bool ok = true;
      for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edge(e);
        if (comp[u] == k && *x[u] + *x[v] != 1 - y[e]) ok = false;
      }
      any = ok;
    }
    if (!any) return false;
  }
  return true;
}

}  // namespace ref
