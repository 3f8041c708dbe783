#include "tdm/gadget.hpp"

#include "tdm/errors.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace tdm {

const char* to_string(GadgetCase c) {
  switch (c) {
    case GadgetCase::w1: return "W1";
    case GadgetCase::w2_even: return "W2-even";
    case GadgetCase::w2_odd: return "W2-odd";
    case GadgetCase::w3_even: return "W3a";
    case GadgetCase::w3_mixed: return "W3b";
  }
  return "?";
}

void GadgetInstance::validate() const {
  if (g_cost.size() != g_edges.size() || w_cost.size() != w_edges.size())
    throw std::invalid_argument("gadget instance: cost vector size mismatch");
  if (!std::is_sorted(g_vertices.begin(), g_vertices.end()) ||
      std::adjacent_find(g_vertices.begin(), g_vertices.end()) != g_vertices.end())
    throw std::invalid_argument("gadget instance: V(G) must be sorted and duplicate free");
  for (int v : g_vertices)
    if (v < 0 || v >= n) throw std::invalid_argument("gadget instance: vertex out of range");
  for (const auto& [u, v] : g_edges)
    if (!std::binary_search(g_vertices.begin(), g_vertices.end(), u) ||
        !std::binary_search(g_vertices.begin(), g_vertices.end(), v))
      throw std::invalid_argument("gadget instance: edge of G leaves V(G)");
  for (const auto& q : g_cost)
    if (q < 0) throw PreconditionError("gadget instance: negative cost");
  for (const auto& q : w_cost)
    if (q < 0) throw PreconditionError("gadget instance: negative cost");
  union_graph();  // rejects loops and shared or parallel edges
}

Graph GadgetInstance::union_graph() const {
  Graph h(n);
  for (const auto& [u, v] : g_edges) h.add_edge(u, v);
  for (const auto& [u, v] : w_edges) h.add_edge(u, v);
  return h;
}

RVec GadgetInstance::union_cost() const {
  RVec c = g_cost;
  c.insert(c.end(), w_cost.begin(), w_cost.end());
  return c;
}

GadgetResult gadget_replace(const GadgetInstance& inst) {
  inst.validate();
  GadgetResult res;
  res.from_union.assign(inst.n, -1);
  for (int v : inst.g_vertices) {
    res.from_union[v] = static_cast<int>(res.to_union.size());
    res.to_union.push_back(v);
  }
  res.gplus = Graph(static_cast<int>(res.to_union.size()));
  for (std::size_t e = 0; e < inst.g_edges.size(); ++e) {
    res.gplus.add_edge(res.from_union[inst.g_edges[e].first], res.from_union[inst.g_edges[e].second]);
    res.cplus.push_back(inst.g_cost[e]);
  }

  Graph wg(inst.n, inst.w_edges);
  int ncomp = 0;
  auto comp = components(wg, &ncomp);
  for (int k = 0; k < ncomp; ++k) {
    GadgetRecord rec;
    for (int v = 0; v < inst.n; ++v)
      if (comp[v] == k && wg.degree(v) > 0) rec.w_vertices.push_back(v);
    if (rec.w_vertices.empty()) continue;
    const auto& wv = rec.w_vertices;
    auto local = [&](int v) { return static_cast<int>(std::lower_bound(wv.begin(), wv.end(), v) - wv.begin()); };
    Graph wl(static_cast<int>(wv.size()));
    RVec cl;
    for (std::size_t e = 0; e < inst.w_edges.size(); ++e)
      if (comp[inst.w_edges[e].first] == k) {
        wl.add_edge(local(inst.w_edges[e].first), local(inst.w_edges[e].second));
        cl.push_back(inst.w_cost[e]);
      }
    auto col = bipartition(wl);
    if (!col) throw PreconditionError("gadget_replace: W is not bipartite");
    for (int v : wv)
      if (res.from_union[v] >= 0) rec.omega.push_back(v);
    const int q = static_cast<int>(rec.omega.size());
    if (q > 3) throw PreconditionError("gadget_replace: more than 3 boundary vertices");
    auto colour = [&](int i) { return (*col)[local(rec.omega[i])]; };

    if (q <= 1) {
      rec.kind = GadgetCase::w1;
    } else if (q == 2) {
      rec.kind = colour(0) == colour(1) ? GadgetCase::w2_even : GadgetCase::w2_odd;
    } else if (colour(0) == colour(1) && colour(1) == colour(2)) {
      rec.kind = GadgetCase::w3_even;
    } else {
      rec.kind = GadgetCase::w3_mixed;
      // the even pair goes first
      if (colour(0) == colour(2)) std::swap(rec.omega[1], rec.omega[2]);
      else if (colour(1) == colour(2)) std::swap(rec.omega[0], rec.omega[2]);
    }

    Rational total = 0;
    for (const auto& x : cl) total += x;
    const Rational big = total + 1;
    RVec wc = induced_weights(wl, cl);
    for (int mask = 0; mask < (1 << q); ++mask) {
      std::vector<char> in(wv.size(), 0), blocked(wv.size(), 0);
      for (int i = 0; i < q; ++i) {
        blocked[local(rec.omega[i])] = 1;
        if ((mask >> i) & 1) in[local(rec.omega[i])] = 1;
      }
      bool ok = true;
      for (const auto& [a, b] : wl.edges())
        if (in[a] && in[b]) ok = false;
      if (!ok) {
        rec.table[mask] = big;
        continue;
      }
      for (int v = 0; v < wl.n(); ++v)
        if (in[v])
          for (const auto& inc : wl.adj(v)) blocked[inc.nbr] = 1;
      std::vector<int> rest;
      for (int v = 0; v < wl.n(); ++v)
        if (!blocked[v]) rest.push_back(v);
      Graph sub = induced(wl, rest);
      RVec sw;
      for (int v : rest) sw.push_back(wc[v]);
      auto r = solve_bipartite(StableSetInstance{sub, sw, {}});
      VertexSet s;
      for (int v = 0; v < wl.n(); ++v)
        if (in[v]) s.push_back(wv[v]);
      for (int v : r.set) s.push_back(wv[rest[v]]);
      std::sort(s.begin(), s.end());
      Rational cost = 0;
      std::vector<char> ins(wv.size(), 0);
      for (int v : s) ins[local(v)] = 1;
      for (int e = 0; e < wl.m(); ++e)
        if (!ins[wl.edge(e).first] && !ins[wl.edge(e).second]) cost += cl[e];
      rec.table[mask] = cost;
      rec.best[mask] = std::move(s);
    }

    auto t = [&](int mask) { return rec.table[mask]; };
    auto vplus = [&]() {
      int v = res.gplus.add_vertex();
      res.to_union.push_back(-1);
      rec.virtual_vertices.push_back(v);
      return v;
    };
    auto eplus = [&](int a, int b, const Rational& c) {
      rec.virtual_edges.push_back(res.gplus.add_edge(a, b));
      res.cplus.push_back(c);
    };
    std::vector<int> om;
    for (int v : rec.omega) om.push_back(res.from_union[v]);
    switch (rec.kind) {
      case GadgetCase::w1:
        break;
      case GadgetCase::w2_even: {
        int x = vplus();
        eplus(om[0], x, t(0b10));
        eplus(x, om[1], t(0b01));
        break;
      }
      case GadgetCase::w2_odd: {
        int x = vplus(), y = vplus();
        eplus(om[0], x, t(0));
        eplus(x, y, t(0b11));
        eplus(y, om[1], t(0));
        break;
      }
      case GadgetCase::w3_even: {
        int a[3];
        for (int& ai : a) ai = vplus();
        int x = vplus();
        for (int i = 0; i < 3; ++i) eplus(om[i], a[i], t(0b111 & ~(1 << i)));
        for (int i = 0; i < 3; ++i) eplus(a[i], x, t(1 << i));
        break;
      }
      case GadgetCase::w3_mixed: {
        int a1 = vplus(), a2 = vplus(), a3 = vplus(), a3p = vplus(), x = vplus();
        eplus(om[0], a1, t(0b010));
        eplus(om[1], a2, t(0b001));
        eplus(om[2], a3, big);
        eplus(a3, a3p, t(0b111));
        eplus(a1, x, t(0b101));
        eplus(a2, x, t(0b110));
        eplus(a3p, x, t(0));
        break;
      }
    }
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j)
        if (wg.adjacent(rec.omega[i], rec.omega[j])) eplus(om[i], om[j], Rational(0));
    res.records.push_back(std::move(rec));
  }
  res.from_union.resize(inst.n, -1);
  return res;
}

VertexSet GadgetResult::map_back(const VertexSet& sp) const {
  std::vector<char> in(gplus.n(), 0);
  for (int v : sp) in[v] = 1;
  VertexSet s;
  for (int v : sp)
    if (to_union[v] >= 0) s.push_back(to_union[v]);
  for (const auto& rec : records) {
    int mask = 0;
    for (std::size_t i = 0; i < rec.omega.size(); ++i)
      if (in[from_union[rec.omega[i]]]) mask |= 1 << i;
    if (!rec.best[mask]) throw PreconditionError("map_back: boundary pattern is not stable in W");
    s.insert(s.end(), rec.best[mask]->begin(), rec.best[mask]->end());
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet GadgetResult::map_forward(const VertexSet& s) const {
  std::vector<char> in(gplus.n(), 0);
  VertexSet sp;
  for (int v : s)
    if (from_union[v] >= 0) {
      sp.push_back(from_union[v]);
      in[from_union[v]] = 1;
    }
  for (const auto& rec : records) {
    const int k = static_cast<int>(rec.virtual_vertices.size());
    int best_mask = -1;
    Rational best;
    for (int mask = 0; mask < (1 << k); ++mask) {
      for (int i = 0; i < k; ++i) in[rec.virtual_vertices[i]] = (mask >> i) & 1;
      bool ok = true;
      Rational cost = 0;
      for (int e : rec.virtual_edges) {
        auto [a, b] = gplus.edge(e);
        if (in[a] && in[b]) ok = false;
        if (!in[a] && !in[b]) cost += cplus[e];
      }
      if (ok && (best_mask < 0 || cost < best)) {
        best_mask = mask;
        best = cost;
      }
    }
    if (best_mask < 0) throw PreconditionError("map_forward: set is not stable");
    for (int i = 0; i < k; ++i) {
      in[rec.virtual_vertices[i]] = (best_mask >> i) & 1;
      if (in[rec.virtual_vertices[i]]) sp.push_back(rec.virtual_vertices[i]);
    }
  }
  std::sort(sp.begin(), sp.end());
  return sp;
}

std::pair<VertexSet, VertexSet> exchange_split(const Graph& w, int v1, int v2, const VertexSet& s1,
                                               const VertexSet& s2) {
  if (v1 == v2) throw PreconditionError("exchange_split: v1 and v2 must differ");
  if (!is_stable(w, s1) || !is_stable(w, s2)) throw PreconditionError("exchange_split: S1 and S2 must be stable");
  auto col = bipartition(w);
  if (!col) throw PreconditionError("exchange_split: W must be bipartite");
  auto has = [](const VertexSet& s, int v) { return std::binary_search(s.begin(), s.end(), v); };
  const bool odd_pattern = has(s1, v1) && has(s1, v2) && !has(s2, v1) && !has(s2, v2);
  const bool even_pattern = has(s1, v1) && !has(s1, v2) && !has(s2, v1) && has(s2, v2);
  auto comp = components(w);
  if (comp[v1] == comp[v2]) {
    const bool odd = (*col)[v1] != (*col)[v2];
    if (odd ? !odd_pattern : !even_pattern)
      throw PreconditionError("exchange_split: intersections do not match the path parity");
  } else if (!odd_pattern && !even_pattern) {
    throw PreconditionError("exchange_split: intersections do not match either case");
  }

  std::vector<char> in(w.n(), 0), k(w.n(), 0);
  for (int v : s1) in[v] = 1;
  for (int v : s2) in[v] = 1;
  std::vector<int> stack{v1};
  k[v1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& inc : w.adj(v))
      if (in[inc.nbr] && !k[inc.nbr]) {
        k[inc.nbr] = 1;
        stack.push_back(inc.nbr);
      }
  }
  VertexSet s3, s4;
  for (int v : s1) (k[v] ? s3 : s4).push_back(v);
  for (int v : s2) (k[v] ? s4 : s3).push_back(v);
  for (auto* s : {&s3, &s4}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  return {s3, s4};
}

}  // namespace tdm
