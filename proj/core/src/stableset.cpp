#include "tdm/stableset.hpp"

#include "tdm/errors.hpp"
#include "tdm/lp.hpp"
#include "tdm/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tdm {

void StableSetInstance::validate() const {
  if (!w.empty() && static_cast<int>(w.size()) != g.n()) throw std::invalid_argument("weight vector size mismatch");
  if (!c.empty() && static_cast<int>(c.size()) != g.m()) throw std::invalid_argument("cost vector size mismatch");
  for (const auto& q : c)
    if (q < 0) throw PreconditionError("edge costs must be nonnegative");
}

StableSetInstance StableSetInstance::from_costs(Graph g, RVec c) {
  StableSetInstance inst;
  inst.w = induced_weights(g, c);
  inst.g = std::move(g);
  inst.c = std::move(c);
  return inst;
}

RVec induced_weights(const Graph& g, const RVec& c) {
  RVec w(g.n(), 0);
  for (int e = 0; e < g.m(); ++e) {
    w[g.edge(e).first] += c[e];
    w[g.edge(e).second] += c[e];
  }
  return w;
}

RationalMatrix incidence_matrix(const Graph& g) {
  RationalMatrix a(g.m(), g.n());
  for (int e = 0; e < g.m(); ++e) {
    a(e, g.edge(e).first) = 1;
    a(e, g.edge(e).second) = 1;
  }
  return a;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.n()) return false;
    in[v] = 1;
  }
  for (const auto& [u, v] : g.edges())
    if (in[u] && in[v]) return false;
  return true;
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= 1ULL << v;
  return m;
}

VertexSet from_mask(std::uint64_t m) {
  VertexSet s;
  while (m) {
    s.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return s;
}

std::vector<int> slack_edges(const Graph& g, const VertexSet& s) {
  std::vector<char> in(g.n(), 0);
  for (int v : s) in[v] = 1;
  std::vector<int> f;
  for (int e = 0; e < g.m(); ++e)
    if (!in[g.edge(e).first] && !in[g.edge(e).second]) f.push_back(e);
  return f;
}

namespace {

// Common denominator scaling; values must fit into int64 afterwards.
std::vector<std::int64_t> scale_to_int(const RVec& v, Integer& scale) {
  scale = 1;
  for (const auto& q : v) scale = boost::multiprecision::lcm(scale, den(q));
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(to_i64(num(q * scale)));
  return out;
}

}  // namespace

StableSetResult brute_force_stable_set(const StableSetInstance& inst, StableMode mode, int cap) {
  inst.validate();
  const Graph& g = inst.g;
  StableSetResult res;
  Integer scale;
  if (mode == StableMode::weight) {
    if (inst.w.empty() && g.n() > 0) throw std::invalid_argument("weight mode needs vertex weights");
    auto w = scale_to_int(inst.w, scale);
    bool found = false;
    __int128 best = 0;
    std::uint64_t best_mask = 0;
    enumerate_stable_sets(g, [&](std::uint64_t s) {
      __int128 v = 0;
      for (auto m = s; m; m &= m - 1) v += w[std::countr_zero(m)];
      if (!found || v > best) {
        found = true;
        best = v;
        best_mask = s;
      }
    }, cap);
    res.set = from_mask(best_mask);
  } else {
    if (inst.c.empty() && inst.g.m() > 0) throw std::invalid_argument("cost mode needs edge costs");
    auto c = scale_to_int(inst.c, scale);
    bool found = false;
    __int128 best = 0;
    std::uint64_t best_mask = 0;
    enumerate_stable_sets(g, [&](std::uint64_t s) {
      __int128 v = 0;
      for (int e = 0; e < g.m(); ++e)
        if (!((s >> g.edge(e).first) & 1) && !((s >> g.edge(e).second) & 1)) v += c[e];
      if (!found || v < best) {
        found = true;
        best = v;
        best_mask = s;
      }
    }, cap);
    res.set = from_mask(best_mask);
  }
  res.value = (mode == StableMode::weight) ? Rational(0) : slack_cost(inst, res.set);
  if (mode == StableMode::weight)
    for (int v : res.set) res.value += inst.w[v];
  return res;
}

namespace {

struct Mwis {
  std::vector<std::int64_t> w;
  std::vector<std::uint64_t> nb;

  std::uint64_t component(std::uint64_t p) const {
    std::uint64_t comp = p & (~p + 1), frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto m = frontier; m; m &= m - 1) next |= nb[std::countr_zero(m)];
      next &= p & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  __int128 positive_sum(std::uint64_t p) const {
    __int128 s = 0;
    for (auto m = p; m; m &= m - 1)
      if (w[std::countr_zero(m)] > 0) s += w[std::countr_zero(m)];
    return s;
  }

  std::pair<__int128, std::uint64_t> solve(std::uint64_t p) const {
    if (!p) return {0, 0};
    std::uint64_t c = component(p);
    if (c != p) {
      auto a = solve(c), b = solve(p & ~c);
      return {a.first + b.first, a.second | b.second};
    }
    int v = -1, deg = -1;
    for (auto m = p; m; m &= m - 1) {
      int u = std::countr_zero(m);
      if (w[u] <= 0) return solve(p & ~(1ULL << u));
      int d = std::popcount(nb[u] & p);
      if (d > deg) {
        deg = d;
        v = u;
      }
    }
    const std::uint64_t bit = 1ULL << v;
    if (deg == 0) {
      auto r = solve(p & ~bit);
      return {r.first + w[v], r.second | bit};
    }
    auto inc = solve(p & ~bit & ~nb[v]);
    inc.first += w[v];
    inc.second |= bit;
    if (positive_sum(p & ~bit) <= inc.first) return inc;
    auto exc = solve(p & ~bit);
    return exc.first > inc.first ? exc : inc;
  }
};

}  // namespace

StableSetResult max_weight_stable_set(const Graph& g, const RVec& w) {
  if (g.n() > 64) throw CapExceeded("max_weight_stable_set: more than 64 vertices");
  if (static_cast<int>(w.size()) != g.n()) throw std::invalid_argument("weight vector size mismatch");
  Integer scale;
  Mwis mw{scale_to_int(w, scale), {}};
  for (int v = 0; v < g.n(); ++v) mw.nb.push_back(g.nbr_mask(v));
  std::uint64_t all = g.n() == 64 ? ~0ULL : ((1ULL << g.n()) - 1);
  auto [val, mask] = mw.solve(all);
  StableSetResult res;
  res.set = from_mask(mask);
  res.value = 0;
  for (int v : res.set) res.value += w[v];
  return res;
}

StableSetResult solve_bipartite(const StableSetInstance& inst) {
  inst.validate();
  if (!is_bipartite(inst.g)) throw PreconditionError("solve_bipartite: graph is not bipartite");
  const Graph& g = inst.g;
  LPProblem lp;
  lp.A = incidence_matrix(g);
  lp.b.assign(g.m(), 1);
  lp.w = inst.w.empty() ? induced_weights(g, inst.c) : inst.w;
  lp.lower.assign(g.n(), Rational(0));
  lp.upper.assign(g.n(), Rational(1));
  auto out = solve(lp);
  if (out.status != LPStatus::optimal) throw std::logic_error("bipartite stable set LP not optimal");
  StableSetResult res;
  for (int v = 0; v < g.n(); ++v) {
    if (!is_integral(out.x[v])) throw std::logic_error("fractional vertex on a bipartite graph");
    if (out.x[v] == 1) res.set.push_back(v);
  }
  res.value = out.objective;
  return res;
}

StableSetResult min_cost_bipartite(const Graph& g, const RVec& c) {
  StableSetInstance inst{g, induced_weights(g, c), c};
  auto r = solve_bipartite(inst);
  Rational total = 0;
  for (const auto& q : c) total += q;
  r.value = total - r.value;
  return r;
}

std::vector<std::uint64_t> induced_odd_cycles(const Graph& g, std::uint64_t mask, std::size_t limit) {
  if (g.n() > 64) throw CapExceeded("induced_odd_cycles: more than 64 vertices");
  std::vector<std::uint64_t> nb(g.n());
  for (int v = 0; v < g.n(); ++v) nb[v] = g.nbr_mask(v) & mask;
  std::vector<std::uint64_t> out;
  for (int s = 0; s < g.n(); ++s) {
    if (!((mask >> s) & 1)) continue;
    const std::uint64_t allowed = mask & ~((2ULL << s) - 1);
    // path holds s..last; forbid = path plus neighbours of interior vertices
    auto rec = [&](auto&& self, std::uint64_t path, int last, int second, std::uint64_t forbid) -> void {
      for (auto m = nb[last] & allowed & ~forbid; m; m &= m - 1) {
        int w = std::countr_zero(m);
        if (last == s) {
          self(self, path | (1ULL << w), w, w, forbid | (1ULL << w));
          continue;
        }
        if ((nb[s] >> w) & 1) {
          std::uint64_t cyc = path | (1ULL << w);
          if ((std::popcount(cyc) & 1) && second < w) {
            out.push_back(cyc);
            if (out.size() > limit) throw CapExceeded("induced_odd_cycles: too many cycles");
          }
          continue;
        }
        self(self, path | (1ULL << w), w, second, forbid | nb[last] | (1ULL << w));
      }
    };
    rec(rec, 1ULL << s, s, -1, 1ULL << s);
  }
  return out;
}

namespace {

std::uint64_t full_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

int ocp_rec(const Graph& g, const std::vector<std::uint64_t>& cycles, std::uint64_t mask, std::size_t from) {
  if (is_bipartite_mask(g, mask)) return 0;
  int best = 0;
  const int ub = std::popcount(mask) / 3;
  for (std::size_t i = from; i < cycles.size() && best < ub; ++i)
    if ((cycles[i] & mask) == cycles[i]) best = std::max(best, 1 + ocp_rec(g, cycles, mask & ~cycles[i], i + 1));
  return best;
}

std::uint64_t component_mask(const Graph& g, std::uint64_t p, int s) {
  std::uint64_t comp = 1ULL << s, frontier = comp;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto m = frontier; m; m &= m - 1) next |= g.nbr_mask(std::countr_zero(m));
    next &= p & ~comp;
    comp |= next;
    frontier = next;
  }
  return comp;
}

}  // namespace

int ocp_brute(const Graph& g, int cap) {
  if (g.n() > cap || g.n() > 64) throw CapExceeded("ocp_brute: graph exceeds the vertex cap");
  auto cycles = induced_odd_cycles(g, full_mask(g.n()));
  return ocp_rec(g, cycles, full_mask(g.n()), 0);
}

int oct_brute(const Graph& g, int cap) {
  if (g.n() > cap || g.n() > 64) throw CapExceeded("oct_brute: graph exceeds the vertex cap");
  const int n = g.n();
  const std::uint64_t all = full_mask(n);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t x = 0;
      for (int i : idx) x |= 1ULL << i;
      if (is_bipartite_mask(g, all & ~x)) return k;
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

ResilienceReport resilience_check(const Graph& g, int rho, int cap) {
  if (g.n() > cap || g.n() > 64) throw CapExceeded("resilience_check: graph exceeds the vertex cap");
  const int n = g.n();
  const std::uint64_t all = full_mask(n);
  auto cycles = induced_odd_cycles(g, all);
  ResilienceReport rep;
  rep.ocp = ocp_rec(g, cycles, all, 0);
  for (int k = 0; k <= std::min(rho, n); ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint64_t x = 0;
      for (int i : idx) x |= 1ULL << i;
      std::uint64_t rest = all & ~x;
      bool rich = false;
      while (rest && !rich) {
        std::uint64_t comp = component_mask(g, rest, std::countr_zero(rest));
        rest &= ~comp;
        if (ocp_rec(g, cycles, comp, 0) == rep.ocp) rich = true;
      }
      if (!rich) {
        rep.resilient = false;
        rep.witness = from_mask(x);
        return rep;
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return rep;
}

EdgeInducedReduction edge_induced_reduce(const Graph& g, const RVec& w) {
  if (static_cast<int>(w.size()) != g.n()) throw std::invalid_argument("weight vector size mismatch");
  for (const auto& q : w)
    if (q < 0) throw PreconditionError("edge_induced_reduce: weights must be nonnegative");
  LPProblem lp;
  lp.A = incidence_matrix(g);
  lp.b.assign(g.m(), 1);
  lp.w = w;
  lp.lower.assign(g.n(), Rational(0));
  lp.upper.assign(g.n(), Rational(1));
  auto out = solve(lp);
  if (out.status != LPStatus::optimal || !out.dual) throw std::logic_error("stable set LP not optimal");

  EdgeInducedReduction r;
  r.x_star = out.x;
  std::vector<char> mid(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    if (out.x[v] == 0) r.s0.push_back(v);
    else if (out.x[v] == 1) r.s1.push_back(v);
    else mid[v] = 1;
  }
  r.w_prime.assign(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if (mid[v]) r.w_prime[v] = w[v];
  r.c.assign(g.m(), 0);
  for (int e = 0; e < g.m(); ++e)
    if (mid[g.edge(e).first] && mid[g.edge(e).second]) r.c[e] = out.dual->y[e];
  if (induced_weights(g, r.c) != r.w_prime) throw std::logic_error("edge_induced_reduce: w' is not induced by c");
  return r;
}

VertexSet lift_edge_induced(const EdgeInducedReduction& r, const VertexSet& s) {
  VertexSet out;
  for (int v : s)
    if (!std::binary_search(r.s0.begin(), r.s0.end(), v)) out.push_back(v);
  out.insert(out.end(), r.s1.begin(), r.s1.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational slack_cost(const StableSetInstance& inst, const VertexSet& s) {
  if (!is_stable(inst.g, s)) throw PreconditionError("slack_cost: set is not stable");
  Rational total = 0;
  for (int e : slack_edges(inst.g, s)) total += inst.c[e];
  return total;
}

bool slack_identity_holds(const StableSetInstance& inst, const VertexSet& s) {
  RVec w = induced_weights(inst.g, inst.c);
  Rational ws = 0, ce = 0;
  for (int v : s) ws += w[v];
  for (const auto& q : inst.c) ce += q;
  return ws + slack_cost(inst, s) == ce;
}

}  // namespace tdm
